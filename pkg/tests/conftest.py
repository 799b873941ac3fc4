import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

MATRIX_GROUPS = ["A1", "A2", "C2", "G2", "A3", "B3", "A1xA1"]
