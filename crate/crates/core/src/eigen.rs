//! Characteristic polynomials and generalized eigenspace splitting over
//! the rationals.
//!
//! Only rational spectra are supported: eigenvalue candidates come from the
//! rational root theorem applied to the integer-cleared characteristic
//! polynomial, so there is no numerical approximation anywhere. A matrix
//! whose characteristic polynomial has an irrational root is reported as
//! [`LinalgError::NonRationalSpectrum`] rather than silently truncated.

use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::subspace::{kernel, Subspace};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error(
        "non-rational spectrum: generalized eigenspaces of the rational \
         eigenvalues span {rational_dim} of {dim} dimensions"
    )]
    NonRationalSpectrum { dim: usize, rational_dim: usize },
}

/// Coefficients of `det(tI - A)`, ascending in `t`, exact and monic.
///
/// Uses the Faddeev-LeVerrier recurrence, which stays in rational
/// arithmetic and needs no pivoting.
pub fn char_poly(a: &Matrix) -> Vec<Scalar> {
    assert!(a.is_square(), "characteristic polynomial of a non-square matrix");
    let n = a.rows();
    let mut coeffs = vec![Scalar::zero(); n + 1];
    coeffs[n] = Scalar::one();
    let mut m = Matrix::zeros(n, n);
    for k in 1..=n {
        // M_k = A (M_{k-1} + c_{n-k+1} I); c_{n-k} = -tr(M_k) / k
        let mut shifted = m.clone();
        for i in 0..n {
            let v = shifted.at(i, i) + &coeffs[n - k + 1];
            shifted.set(i, i, v);
        }
        m = a * &shifted;
        coeffs[n - k] = -(m.trace() / Scalar::from_integer(BigInt::from(k)));
    }
    coeffs
}

/// Clears denominators and divides by the content, yielding a primitive
/// integer polynomial with the same roots and a positive leading term.
pub fn clear_denominators(coeffs: &[Scalar]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in coeffs {
        lcm = lcm.lcm(c.denom());
    }
    let mut ints: Vec<BigInt> = coeffs.iter().map(|c| (c * Scalar::from_integer(lcm.clone())).to_integer()).collect();
    let mut content = BigInt::zero();
    for c in &ints {
        content = content.gcd(c);
    }
    if !content.is_zero() && !content.is_one() {
        for c in ints.iter_mut() {
            *c = &*c / &content;
        }
    }
    if let Some(lead) = ints.iter().rev().find(|c| !c.is_zero()) {
        if lead.is_negative() {
            for c in ints.iter_mut() {
                *c = -&*c;
            }
        }
    }
    ints
}

fn divisors(n: &BigUint) -> Vec<BigUint> {
    assert!(!n.is_zero());
    // Trial division; magnitudes here come from small structure constants.
    if let Some(small) = n.to_u128() {
        let mut out = Vec::new();
        let mut i: u128 = 1;
        while i.saturating_mul(i) <= small {
            if small % i == 0 {
                out.push(BigUint::from(i));
                if i != small / i {
                    out.push(BigUint::from(small / i));
                }
            }
            i += 1;
        }
        out.sort();
        return out;
    }
    let mut out = Vec::new();
    let mut i = BigUint::one();
    loop {
        let sq = &i * &i;
        if &sq > n {
            break;
        }
        if (n % &i).is_zero() {
            out.push(i.clone());
            let other = n / &i;
            if other != i {
                out.push(other);
            }
        }
        i += BigUint::one();
    }
    out.sort();
    out
}

fn eval_poly(coeffs: &[Scalar], x: &Scalar) -> Scalar {
    let mut acc = Scalar::zero();
    for c in coeffs.iter().rev() {
        acc = &acc * x + c;
    }
    acc
}

/// Distinct rational roots of a nonzero polynomial, sorted ascending.
pub fn rational_roots(coeffs: &[Scalar]) -> Vec<Scalar> {
    let ints = clear_denominators(coeffs);
    let degree = match ints.iter().rposition(|c| !c.is_zero()) {
        Some(d) => d,
        None => panic!("rational_roots of the zero polynomial"),
    };
    let mut roots = BTreeSet::new();
    let low = match ints.iter().position(|c| !c.is_zero()) {
        Some(l) => l,
        None => unreachable!(),
    };
    if low > 0 {
        roots.insert(Scalar::zero());
    }
    if degree > low {
        let trailing = ints[low].magnitude().clone();
        let leading = ints[degree].magnitude().clone();
        for q in divisors(&leading) {
            for p in divisors(&trailing) {
                let candidate =
                    Scalar::new(BigInt::from(p.clone()), BigInt::from(q.clone()));
                if eval_poly(coeffs, &candidate).is_zero() {
                    roots.insert(candidate.clone());
                }
                let neg = -candidate;
                if eval_poly(coeffs, &neg).is_zero() {
                    roots.insert(neg);
                }
            }
        }
    }
    roots.into_iter().collect()
}

/// Splits coordinate space into the generalized eigenspaces
/// `ker (A - a I)^n` of the rational eigenvalues `a`, sorted ascending.
///
/// Succeeds exactly when the spectrum is rational, i.e. when the
/// eigenspace dimensions add up to `n`.
pub fn rational_eigen_decomposition(
    a: &Matrix,
) -> Result<Vec<(Scalar, Subspace)>, LinalgError> {
    assert!(a.is_square(), "eigen decomposition of a non-square matrix");
    let n = a.rows();
    if n == 0 {
        return Ok(Vec::new());
    }
    let poly = char_poly(a);
    let mut spaces = Vec::new();
    let mut total = 0;
    for root in rational_roots(&poly) {
        let shifted = a - &Matrix::identity(n).scale(&root);
        let space = kernel(&shifted.pow(n));
        total += space.dim();
        spaces.push((root, space));
    }
    if total < n {
        return Err(LinalgError::NonRationalSpectrum { dim: n, rational_dim: total });
    }
    Ok(spaces)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect())
    }

    /// Independent characteristic polynomial for small matrices: Laplace
    /// expansion of det(tI - A) over polynomial entries, coefficients
    /// ascending in t.
    fn char_poly_by_cofactors(a: &Matrix) -> Vec<Scalar> {
        type Poly = Vec<Scalar>;
        fn add(p: &Poly, q: &Poly) -> Poly {
            let mut out = vec![Scalar::zero(); p.len().max(q.len())];
            for (i, c) in p.iter().enumerate() {
                out[i] += c;
            }
            for (i, c) in q.iter().enumerate() {
                out[i] += c;
            }
            out
        }
        fn mul(p: &Poly, q: &Poly) -> Poly {
            let mut out = vec![Scalar::zero(); p.len() + q.len() - 1];
            for (i, a) in p.iter().enumerate() {
                for (j, b) in q.iter().enumerate() {
                    out[i + j] += a * b;
                }
            }
            out
        }
        fn det(entries: &[Vec<Poly>]) -> Poly {
            let n = entries.len();
            if n == 1 {
                return entries[0][0].clone();
            }
            let mut acc = vec![Scalar::zero()];
            for col in 0..n {
                let minor: Vec<Vec<Poly>> = (1..n)
                    .map(|r| {
                        (0..n).filter(|&c| c != col).map(|c| entries[r][c].clone()).collect()
                    })
                    .collect();
                let mut term = mul(&entries[0][col], &det(&minor));
                if col % 2 == 1 {
                    term = term.iter().map(|c| -c.clone()).collect();
                }
                acc = add(&acc, &term);
            }
            acc
        }
        let n = a.rows();
        let entries: Vec<Vec<Poly>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        if r == c {
                            vec![-a.at(r, c).clone(), Scalar::one()]
                        } else {
                            vec![-a.at(r, c).clone()]
                        }
                    })
                    .collect()
            })
            .collect();
        let mut p = det(&entries);
        p.truncate(n + 1);
        while p.len() < n + 1 {
            p.push(Scalar::zero());
        }
        p
    }

    #[test]
    fn char_poly_identity_2x2() {
        // (t-1)^2 = t^2 - 2t + 1
        assert_eq!(char_poly(&Matrix::identity(2)), vec![int(1), int(-2), int(1)]);
    }

    #[test]
    fn char_poly_scalar_matrix() {
        // (t-4)^3 = t^3 - 12t^2 + 48t - 64
        let a = m(&[&[4, 0, 0], &[0, 4, 0], &[0, 0, 4]]);
        assert_eq!(char_poly(&a), vec![int(-64), int(48), int(-12), int(1)]);
    }

    #[test]
    fn char_poly_companion_of_t2_minus_2() {
        let a = m(&[&[0, 2], &[1, 0]]);
        assert_eq!(char_poly(&a), vec![int(-2), int(0), int(1)]);
    }

    #[test]
    fn char_poly_agrees_with_cofactor_expansion() {
        let samples = [
            m(&[&[2, 1, 0], &[1, -1, 3], &[0, 5, 4]]),
            m(&[&[0, -1], &[1, 0]]),
            Matrix::from_rows(vec![
                vec![rat(1, 2), rat(-3, 4), int(2)],
                vec![int(0), rat(5, 6), int(1)],
                vec![int(7), int(0), rat(-1, 3)],
            ]),
        ];
        for a in samples {
            assert_eq!(char_poly(&a), char_poly_by_cofactors(&a));
        }
    }

    #[test]
    fn rational_roots_examples() {
        // t^2 - 2 has no rational roots.
        assert_eq!(rational_roots(&[int(-2), int(0), int(1)]), vec![]);
        // 2t^2 - 3t + 1 = (2t - 1)(t - 1)
        assert_eq!(rational_roots(&[int(1), int(-3), int(2)]), vec![rat(1, 2), int(1)]);
        // t^3 + t = t(t^2 + 1)
        assert_eq!(rational_roots(&[int(0), int(1), int(0), int(1)]), vec![int(0)]);
        // Rational coefficients: (t - 1/3)(t + 2) = t^2 + 5/3 t - 2/3
        assert_eq!(
            rational_roots(&[rat(-2, 3), rat(5, 3), int(1)]),
            vec![int(-2), rat(1, 3)]
        );
    }

    #[test]
    fn eigen_diagonalizable_with_multiplicity() {
        let a = m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, -1]]);
        let spaces = rational_eigen_decomposition(&a).unwrap();
        assert_eq!(spaces.len(), 2);
        assert_eq!(spaces[0].0, int(-1));
        assert_eq!(spaces[0].1.dim(), 1);
        assert_eq!(spaces[1].0, int(1));
        assert_eq!(spaces[1].1.dim(), 2);
    }

    #[test]
    fn eigen_jordan_block_needs_powers() {
        let a = m(&[&[0, 1], &[0, 0]]);
        let spaces = rational_eigen_decomposition(&a).unwrap();
        assert_eq!(spaces.len(), 1);
        assert_eq!(spaces[0].0, int(0));
        assert_eq!(spaces[0].1, Subspace::full(2));
    }

    #[test]
    fn eigen_rotation_is_non_rational() {
        let a = m(&[&[0, -1], &[1, 0]]);
        assert_eq!(
            rational_eigen_decomposition(&a),
            Err(LinalgError::NonRationalSpectrum { dim: 2, rational_dim: 0 })
        );
    }

    #[test]
    fn eigen_spaces_intersect_trivially() {
        // Mixed spectrum {2, -3} with a nontrivial Jordan structure at 2.
        let a = m(&[&[2, 1, 0], &[0, 2, 0], &[0, 0, -3]]);
        let spaces = rational_eigen_decomposition(&a).unwrap();
        let total: usize = spaces.iter().map(|(_, s)| s.dim()).sum();
        assert_eq!(total, 3);
        for i in 0..spaces.len() {
            for j in i + 1..spaces.len() {
                assert!(spaces[i].1.intersect(&spaces[j].1).is_zero());
            }
        }
    }
}
