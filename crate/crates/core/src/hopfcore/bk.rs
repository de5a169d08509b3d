use std::sync::Arc;

use crate::algcore::{AlgError, Algebra, AlgebraMap};
use crate::exactlin::{Rational, SparseMatrix, SparseVec, TensorElement};

use super::HopfAlgebra;

/// Basis index of `x_{i_1} ⋯ x_{i_m} g^t` in `B_k` (indices 1-based).
///
/// Bits from most to least significant are `e_1, …, e_k, t`.
pub fn bk_index(k: usize, xs: &[usize], g: bool) -> usize {
    let mut idx = usize::from(g);
    for &i in xs {
        assert!((1..=k).contains(&i), "x_{i} not in B_{k}");
        idx |= 1 << (k - i + 1);
    }
    idx
}

/// `g` for `i = 0`, otherwise `x_i`.
pub fn bk_generator(k: usize, i: usize) -> SparseVec {
    if i == 0 {
        SparseVec::unit(1)
    } else {
        SparseVec::unit(bk_index(k, &[i], false))
    }
}

fn x_set(k: usize, idx: usize) -> Vec<usize> {
    (1..=k).filter(|i| idx >> (k - i + 1) & 1 == 1).collect()
}

fn label(k: usize, idx: usize) -> String {
    let mut s: String = x_set(k, idx).iter().map(|i| format!("x{i}")).collect();
    if idx & 1 == 1 {
        s.push('g');
    }
    if s.is_empty() {
        s.push('1');
    }
    s
}

/// `x^E g^t · x^F g^u = (−1)^{t|F| + inv(E,F)} x^{E∪F} g^{t+u}`, zero when `E ∩ F ≠ ∅`.
fn monomial_product(k: usize, a: usize, b: usize) -> SparseVec {
    let (ea, eb) = (a >> 1, b >> 1);
    if ea & eb != 0 {
        return SparseVec::new();
    }
    let (fa, fb) = (x_set(k, a), x_set(k, b));
    let inversions = fa.iter().map(|i| fb.iter().filter(|j| i > j).count()).sum::<usize>();
    let sign = (a & 1) * fb.len() + inversions;
    let idx = ((ea | eb) << 1) | ((a ^ b) & 1);
    SparseVec::single(idx, if sign.is_multiple_of(2) { Rational::one() } else { -Rational::one() })
}

/// The Hopf algebra `B_k` generated by `g, x_1, …, x_k` with `g² = 1`,
/// `x_i² = 0`, `x_i x_j = −x_j x_i`, `g x_i = −x_i g`, `Δ(g) = g ⊗ g`,
/// `Δ(x_i) = 1 ⊗ x_i + x_i ⊗ g`, `S(g) = g`, `S(x_i) = g x_i`.
pub fn build_bk(k: usize) -> HopfAlgebra {
    assert!(k >= 1, "B_k needs k ≥ 1");
    let n = 1usize << (k + 1);
    let mult = (0..n * n).map(|p| monomial_product(k, p / n, p % n)).collect();
    let labels = (0..n).map(|i| label(k, i)).collect();
    let gens: Vec<SparseVec> = (0..=k).map(|i| bk_generator(k, i)).collect();
    let alg = Algebra::new(format!("B{k}"), labels, mult, SparseVec::unit(0)).expect("valid shape").with_generators(gens);

    let one = SparseVec::unit(0);
    let g = bk_generator(k, 0);
    let delta_gen = |i: usize| -> TensorElement {
        if i == 0 {
            TensorElement::from_factors(n, &[g.clone(), g.clone()])
        } else {
            let x = bk_generator(k, i);
            TensorElement::from_factors(n, &[one.clone(), x.clone()]).add(&TensorElement::from_factors(n, &[x, g.clone()]))
        }
    };
    let mut comult = Vec::with_capacity(n);
    let mut antipode = Vec::with_capacity(n);
    for idx in 0..n {
        let xs = x_set(k, idx);
        let mut d = TensorElement::from_factors(n, &[one.clone(), one.clone()]);
        for &i in &xs {
            d = d.mul(&delta_gen(i), &alg).expect("degree 2");
        }
        let mut s = one.clone();
        if idx & 1 == 1 {
            d = d.mul(&delta_gen(0), &alg).expect("degree 2");
            s = g.clone();
        }
        for &i in xs.iter().rev() {
            s = alg.mul(&s, &alg.mul(&g, &bk_generator(k, i)));
        }
        comult.push(d.into_coeffs());
        antipode.push(s);
    }
    let counit = SparseVec::from_pairs(vec![(0, Rational::one()), (1, Rational::one())]);
    HopfAlgebra::new(Arc::new(alg), comult, counit, SparseMatrix::from_columns(n, antipode)).expect("valid shape")
}

/// The inclusion `B_k → B_{l+k}`, `g ↦ g`, `x_i ↦ x_{l+i}`.
pub fn bk_subalgebra_inclusion(small: &HopfAlgebra, big: &HopfAlgebra, k: usize, l: usize) -> Result<AlgebraMap, AlgError> {
    let n = 1usize << (k + 1);
    if small.dim() != n || big.dim() != 1 << (k + l + 1) {
        return Err(AlgError::Shape(format!("expected B_{k} inside B_{}", k + l)));
    }
    let cols = (0..n)
        .map(|idx| {
            let xs: Vec<usize> = x_set(k, idx).iter().map(|i| i + l).collect();
            SparseVec::unit(bk_index(k + l, &xs, idx & 1 == 1))
        })
        .collect();
    AlgebraMap::new(small.algebra().clone(), big.algebra().clone(), SparseMatrix::from_columns(big.dim(), cols))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indices_and_labels() {
        assert_eq!(bk_index(1, &[], true), 1);
        assert_eq!(bk_index(1, &[1], false), 2);
        assert_eq!(bk_index(2, &[1], false), 4);
        assert_eq!(label(2, 0b111), "x1x2g");
    }

    #[test]
    fn coproduct_of_x1() {
        let h = build_bk(2);
        let x = bk_generator(2, 1);
        let expected = TensorElement::from_factors(8, &[SparseVec::unit(0), x.clone()])
            .add(&TensorElement::from_factors(8, &[x.clone(), bk_generator(2, 0)]));
        assert_eq!(h.coproduct(&x), expected);
    }

    #[test]
    fn g_anticommutes_with_x() {
        let h = build_bk(2);
        let (g, x) = (bk_generator(2, 0), bk_generator(2, 1));
        assert_eq!(h.mul(&g, &x), h.mul(&x, &g).neg());
        let x2 = bk_generator(2, 2);
        assert_eq!(h.mul(&x, &x2), h.mul(&x2, &x).neg());
        assert!(h.mul(&x, &x).is_zero());
    }
}
