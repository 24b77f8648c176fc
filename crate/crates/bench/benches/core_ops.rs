use criterion::{criterion_group, criterion_main, Criterion};
use quadlie::eigen::rational_eigen_decomposition;
use quadlie::form::adjoint;
use quadlie::rota_baxter::find_weights;
use quadlie::subspace::Subspace;
use quadlie::tensor::is_cybe_solution;
use quadlie::{catalog, int, Matrix};
use quadlie_bench::{dual_fixture, harmonized_fixture};
use std::hint::black_box;

fn yang_baxter_element(c: &mut Criterion) {
    let (l, _, r, _) = dual_fixture();
    c.bench_function("cybe dim 6", |b| {
        b.iter(|| is_cybe_solution(black_box(&l), black_box(&r)))
    });
}

fn weight_search(c: &mut Criterion) {
    let (l, form, _, op) = dual_fixture();
    let opstar = adjoint(&form, &op).expect("form is non-degenerate");
    c.bench_function("find_weights dim 6", |b| {
        b.iter(|| find_weights(black_box(&l), black_box(&opstar)))
    });
}

fn eigen_decomposition(c: &mut Criterion) {
    let (_, form, r, _) = harmonized_fixture();
    let op = quadlie::tensor::operator_of(&form, &r);
    let opstar = adjoint(&form, &op).expect("form is non-degenerate");
    let theta0 = op.add(&opstar);
    c.bench_function("rational eigen dim 6", |b| {
        b.iter(|| rational_eigen_decomposition(black_box(theta0.matrix())))
    });
}

fn row_reduction(c: &mut Criterion) {
    let n = 12;
    // Dense full-rank-deficient fixture with mixed magnitudes.
    let m = Matrix::from_fn(n, n, |i, j| int(((i * j + i + 1) % 7) as i64 - 3));
    let rows: Vec<Vec<_>> = (0..n).map(|i| (0..n).map(|j| m.at(i, j).clone()).collect()).collect();
    c.bench_function("rref dim 12", |b| {
        b.iter(|| Subspace::from_rows(black_box(n), black_box(&rows)))
    });
}

fn catalog_verification(c: &mut Criterion) {
    c.bench_function("catalog verify all", |b| {
        b.iter(|| {
            let outcomes = catalog::verify_all();
            assert!(outcomes.iter().all(|o| o.all_passed()));
        })
    });
}

criterion_group!(
    benches,
    yang_baxter_element,
    weight_search,
    eigen_decomposition,
    row_reduction,
    catalog_verification
);
criterion_main!(benches);
