import sys
from pathlib import Path

# allow running pytest from a fresh checkout without installing the package
_src = Path(__file__).parent / "src"
if (_src / "g2hecke").is_dir() and str(_src) not in sys.path:
    sys.path.insert(0, str(_src))
