from __future__ import annotations

import itertools
import sys

import pytest

from hws.codes import build_rm22


def codewords(code):
    """All codewords by direct enumeration of messages (test oracle)."""
    F, G = code.field, code.generator
    out = []
    for msg in itertools.product(range(code.q), repeat=code.k):
        w = []
        for j in range(code.n):
            v = 0
            for i, a in enumerate(msg):
                if a:
                    v = F.add(v, F.mul(a, G[i, j]))
            w.append(v)
        out.append(tuple(w))
    return out


def support_mask(word) -> int:
    return sum(1 << j for j, x in enumerate(word) if x)


@pytest.fixture(scope="session")
def c2():
    return build_rm22(2)


@pytest.fixture(scope="session")
def c3():
    return build_rm22(3)


@pytest.fixture(scope="session")
def c3_words(c3):
    return codewords(c3)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n, (ok, detail) in sorted(mod.RESULTS.items()):
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}")
