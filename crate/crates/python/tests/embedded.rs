use pymultiring::pymultiring as module;
use pyo3::ffi::c_str;
use pyo3::prelude::*;

fn run(code: &std::ffi::CStr) {
    pyo3::append_to_inittab!(module);
    Python::attach(|py| {
        if let Err(e) = py.run(code, None, None) {
            e.print(py);
            panic!("python code failed");
        }
    });
}

#[test]
fn module_works_from_an_embedded_interpreter() {
    run(c_str!(
        r#"
import json
from pymultiring import Ring, MultiRingSpace, MultiringError, BudgetExceeded

z6 = Ring.cyclic(6)
assert z6.ideals() == [["0"], ["0", "3"], ["0", "2", "4"], ["0", "1", "2", "3", "4", "5"]]
assert z6.maximal_ideals() == [["0", "2", "4"], ["0", "3"]]
assert z6.idempotents() == ["0", "1", "3", "4"]
assert sorted(z6.decompose_unit()) == ["3", "4"]
assert not z6.is_field() and Ring.cyclic(5).is_field()

spec = json.dumps({
    "universe": ["a0", "a1", "a2", "a3", "b0", "b1", "b2", "b3", "b4", "b5"],
    "rings": [
        {"name": "Z4", "elements": ["a0", "a1", "a2", "a3"], "cyclic": 4},
        {"name": "Z6", "elements": ["b0", "b1", "b2", "b3", "b4", "b5"], "cyclic": 6},
    ],
})
m = MultiRingSpace.from_spec(spec)
assert m.is_artin()
assert len(m.chain()) == 5
assert m.is_ideal_subspace(["a0", "a2", "b0", "b3"], [1, 2])
assert not m.is_subspace(["a1"], [1])

try:
    MultiRingSpace.from_spec("{")
except MultiringError:
    pass
else:
    raise AssertionError("syntax error not raised")

try:
    MultiRingSpace.from_spec(spec, subset_budget=1).rings[0].ideals()
except BudgetExceeded:
    pass
else:
    raise AssertionError("budget not enforced")
"#
    ));
}
