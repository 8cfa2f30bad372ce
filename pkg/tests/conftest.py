import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from lrbounds.tableaux import parse_tableau  # noqa: E402

# tableaux printed in the running examples, in the text format
S_CONTENT = ". . 2\n. 1 4\n2 2"
S1 = ". . 2 1\n. 1 3\n1 2"
S2 = ". . 1 1\n. 1 2\n3 3"
S3 = ". . 1 1\n. 1 2\n2 3"
S4 = ". . 1 1\n. 2 2\n4 3"
LR_PAIR = (". . 1 1\n. 1 2\n2 3", ". . 1 1\n. 2 2\n1 3")
TILED_T = ". . 1 1 1\n. 1 2 2\n1 2 3 3\n4"
TILED_T_SEQUENCES = """\
B1=[(4,1),4],[(3,4),3],[(2,4),2],[(1,5),1]
B2=[(3,3),3],[(2,3),2],[(1,4),1]
B3=[(3,2),2],[(1,3),1]
B4=[(3,1),1]
B5=[(2,2),1]
"""
BUMP_T = """\
. . . . . . 1 1 1 1 1
. . . . . 1 2 2 2 2
. . . . 1 2 3
. . . . 3 3
. . 2 2 4 4
. . 3 4
. 3 4 5
"""


@pytest.fixture
def bump_example():
    return parse_tableau(BUMP_T)


@pytest.fixture
def tiled_example():
    return parse_tableau(TILED_T)
