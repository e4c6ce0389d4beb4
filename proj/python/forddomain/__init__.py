"""Ford domains of rank-two cusped quotient groups.

Certified Ford domain computation, core-tunnel length measurement, and the
homology arithmetic for Dehn-filling slope selection.  The heavy lifting
lives in the compiled `_core` module; this wrapper adds dict-level helpers.
"""

import json as _json

from ._core import (
    FordError,
    Moebius,
    analyze_json,
    epsilon_for_target,
    family_generator,
    homology_json,
    render_svg_json,
    sweep_json,
)

__version__ = "0.1.0"

__all__ = [
    "FordError",
    "Moebius",
    "analyze",
    "analyze_json",
    "epsilon_for_target",
    "family_generator",
    "homology",
    "homology_json",
    "render_svg",
    "render_svg_json",
    "sweep",
    "sweep_json",
    "__version__",
]


def analyze(config):
    """Run the pipeline on a config dict; returns the report as a dict."""
    return _json.loads(analyze_json(_json.dumps(config)))


def sweep(config):
    """Run the sweep described by a config dict; returns the report dict."""
    return _json.loads(sweep_json(_json.dumps(config)))


def render_svg(config):
    """Return the SVG rendering of a config dict's analysis."""
    return render_svg_json(_json.dumps(config))


def homology(classes, k=0):
    """Filling-slope plan for a list of (a, b) classes; returns a dict."""
    payload = {"classes": [list(map(int, g)) for g in classes], "k": int(k)}
    return _json.loads(homology_json(_json.dumps(payload)))
