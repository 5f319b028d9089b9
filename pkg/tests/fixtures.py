"""Fixtures for tests."""
from pathlib import Path

TEST_FILES_DIR: Path = Path(__file__).parent / "files"
K33_EDGE_LIST: Path = TEST_FILES_DIR / "k33.el"
FIGURE1_EDGE_LIST: Path = TEST_FILES_DIR / "fig1.el"
C5_EDGE_LIST: Path = TEST_FILES_DIR / "c5.el"
DIGON_EDGE_LIST: Path = TEST_FILES_DIR / "digon.el"
LOOP_EDGE_LIST: Path = TEST_FILES_DIR / "loop.el"
PETERSEN_GRAPH6: Path = TEST_FILES_DIR / "petersen.g6"
