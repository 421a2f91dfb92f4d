"""Exact verification kernel for a Cremona involution's fixed field.

Thin wrapper over the compiled extension: expressions and maps travel as
canonical strings, reports come back as plain dicts.
"""

import json
import os

try:
    from . import _cremona as _core
except ImportError:  # running from the source tree against a CMake build
    import importlib.util as _ilu

    _build_dir = os.environ.get("CREMONA_PYTHON_MODULE_DIR")
    if not _build_dir:
        raise
    for _fn in sorted(os.listdir(_build_dir)):
        if _fn.startswith("_cremona") and _fn.endswith((".so", ".pyd", ".dylib")):
            _spec = _ilu.spec_from_file_location(
                "_cremona", os.path.join(_build_dir, _fn)
            )
            _core = _ilu.module_from_spec(_spec)
            _spec.loader.exec_module(_core)
            break
    else:
        raise

KernelError = _core.KernelError
ParseError = _core.ParseError
SchemaError = _core.SchemaError
DivisionByZero = _core.DivisionByZero

canonical = _core.canonical
map_images = _core.map_images
apply_map = _core.apply_map
compose_maps = _core.compose_maps
involution_check = _core.involution_check
reduce_map = _core.reduce_map
resultant = _core.resultant
sections = _core.sections
required_display_tags = _core.required_display_tags


def default_scenario_dir():
    """Directory scenario files are read from.

    Resolution order: the CREMONA_SCENARIO_DIR environment variable, the
    scenarios/ directory shipped inside an installed package, then the
    extension's own default (./scenarios or the source tree).
    """
    env = os.environ.get("CREMONA_SCENARIO_DIR")
    if env:
        return env
    packaged = os.path.join(os.path.dirname(__file__), "scenarios")
    if os.path.isdir(packaged):
        return packaged
    return _core.default_scenario_dir()


def run_section(section, dir=None):
    """Run one scenario section; returns the report as a dict."""
    return json.loads(_core.run_section(section, dir or default_scenario_dir()))


def run_all(seed=1, dir=None):
    """Run sections, errata determinations, and property suites; returns a dict."""
    return json.loads(_core.run_all(seed, dir or default_scenario_dir()))


def detect_errata(dir=None):
    """Compute which displayed-formula variants are consistent; returns a dict."""
    return json.loads(_core.detect_errata(dir or default_scenario_dir()))
