//! Shared fixtures for the benchmarks.

use quadlie::catalog;
use quadlie::{BilinearForm, LieAlgebra, LinearOperator, Tensor2};

pub fn dual_fixture() -> (LieAlgebra, BilinearForm, Tensor2, LinearOperator) {
    let entry = catalog::get("sl2-dual-example3").expect("catalog entry exists");
    let l = entry.algebra.clone();
    let form = entry.form.clone().expect("entry has a form");
    let r = entry.tensor("r").expect("entry has r").clone();
    let op = entry.operator("R").expect("entry has R").clone();
    (l, form, r, op)
}

pub fn harmonized_fixture() -> (LieAlgebra, BilinearForm, Tensor2, LinearOperator) {
    let entry = catalog::get("sl2-sl2-harmonized").expect("catalog entry exists");
    let l = entry.algebra.clone();
    let form = entry.form.clone().expect("entry has a form");
    let r = entry.tensor("r").expect("entry has r").clone();
    let op = entry.operator("R").expect("entry has R").clone();
    (l, form, r, op)
}
