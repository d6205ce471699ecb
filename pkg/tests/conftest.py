import sys
from pathlib import Path

# lets tests import the oracle helpers as a package
sys.path.insert(0, str(Path(__file__).parent))
