"""Smoke test for the uta_py extension module.

Build and install it first, e.g. ``pip install maturin`` then
``maturin develop -m crates/py/Cargo.toml``, and run ``python python/smoke_test.py``.
"""

import json

import uta_py


def main():
    ws = uta_py.Workspace(bundled=True)
    assert "parity-odd" in ws.recognizers

    odd = ws.recognizer("parity-odd")
    assert odd.eval("f(x,x)") == "0"
    assert not odd.accepts("f(x,x)")
    assert odd.accepts("f(x,f(x,x))")
    assert odd.complement().accepts("f(x,x)")
    assert odd.sa_size() == 2
    assert not odd.is_finite()

    table = odd.symbols
    t = table.parse("f(x,f(x))")
    assert (t.height, t.root, t.size) == (2, "f", 4)
    assert str(t) == "f(x,f(x))" and len(t.children) == 2
    assert [str(s) for s in table.enumerate(2, 1)][:2] == ["x", "f"]

    rootf = ws.recognizer("rootf")
    verdict = json.loads(rootf.decide("def"))
    assert verdict == {"kind": "Def", "k": 1, "verdict": "yes", "method": "exact"}
    assert json.loads(odd.decide("ap"))["verdict"] == "no"

    single = ws.recognizer("singleton-x")
    assert [str(m) for m in single.finite_members()] == ["x"]
    assert not single.equivalent(ws.recognizer("x-or-f"))
    assert str(single.counterexample(ws.recognizer("x-or-f"))) == "f"
    assert single.union(single.complement()).equivalent(ws.recognizer("all-trees"))

    extra = uta_py.Workspace()
    extra.load_str(ws.dump())
    assert extra.recognizer("rootf").equivalent(rootf)

    try:
        table.parse("g(x)")
    except ValueError:
        pass
    else:
        raise AssertionError("unknown symbol accepted")

    print("uta_py smoke test passed")


if __name__ == "__main__":
    main()
