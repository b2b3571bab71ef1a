import numpy as np
import pytest

from zccs import _backend

# Transcribed from the worked example: the binary (4,4,8) CCC and its
# Kronecker product with (1, 1, -1).  Kept here, independent of the library
# copy, so that construction output can be compared against the printed table.
TABLE2_TEXT = """
- - + + + - + + - + + - + + - + + - + + - - - +
- - + - - + + + - - - + + + - - - + + + - + + -
- - + + + - - - + - - + + + - + + - - - + + + -
+ + - + + - + + - - - + - - + + + - + + - + + -

- - + - - + + + - - - + + + - - - + + + - + + -
- - + + + - + + - + + - + + - + + - + + - - - +
- - + - - + - - + + + - + + - - - + - - + - - +
+ + - - - + + + - + + - - - + - - + + + - - - +

- - + + + - - - + - - + + + - + + - - - + + + -
+ + - + + - + + - - - + - - + + + - + + - + + -
- - + + + - + + - + + - + + - + + - + + - - - +
- - + - - + + + - - - + + + - - - + + + - + + -

+ + - + + - + + - - - + - - + + + - + + - + + -
- - + + + - - - + - - + + + - + + - - - + + + -
+ + - + + - - - + + + - - - + + + - - - + - - +
+ + - - - + - - + - - + - - + - - + - - + + + -
"""

TABLE1_TEXT = """
- + + + + + + -
- - + - + - + +
- + - - + + - +
+ + + - - + + +

- - + - + - + +
- + + + + + + -
- - - + + - - -
+ - + + - - + -

- + - - + + - +
+ + + - - + + +
- + + + + + + -
- - + - + - + +

+ + + - - + + +
- + - - + + - +
+ + - + - + - -
+ - - - - - - +
"""


def parse_blocks(text):
    """Sign text -> int array of shape (K, M, N)."""
    blocks = [b for b in text.strip().split("\n\n")]
    return np.array([
        [[1 if c == "+" else -1 for c in line.split()] for line in b.strip().splitlines()]
        for b in blocks
    ])


def naive_accs(x, y, tau):
    """Literal two-branch definition, plain Python loops."""
    n = len(x)
    if tau >= n or tau <= -n:
        return 0
    total = 0
    if tau >= 0:
        for i in range(n - tau):
            total += x[i + tau] * np.conj(y[i])
    else:
        for i in range(n + tau):
            total += x[i] * np.conj(y[i - tau])
    return complex(total)


def naive_profile(x, y=None):
    y = x if y is None else y
    n = len(x)
    return np.array([naive_accs(x, y, t) for t in range(-(n - 1), n)])


@pytest.fixture
def table2():
    return parse_blocks(TABLE2_TEXT)


@pytest.fixture
def table1_signs():
    return parse_blocks(TABLE1_TEXT)


@pytest.fixture
def rng():
    return np.random.default_rng(20261015)


@pytest.fixture(params=_backend.available())
def kernel_impl(request):
    return _backend.get(request.param)


# -- acceptance summary --------------------------------------------------------
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def tables_from_source(path):
    """Sign blocks found in the LaTeX source of the worked example (smallmatrix environments)."""
    import re

    text = open(path, encoding="utf-8").read()
    blocks = re.findall(r"\\begin\{smallmatrix\}(.*?)\\end\{smallmatrix\}", text, re.S)
    out = []
    for b in blocks:
        rows = [r.split() for r in b.split("\\\\") if r.strip()]
        out.append([[1 if c == "+" else -1 for c in r] for r in rows])
    return out
