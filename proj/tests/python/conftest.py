import os
import sys

# when testing a CMake build from the source tree, the package sources live
# under python/ and the extension in the build directory
_pkg_dir = os.environ.get("CREMONA_PYTHON_PACKAGE_DIR")
if _pkg_dir and _pkg_dir not in sys.path:
    sys.path.insert(0, _pkg_dir)
