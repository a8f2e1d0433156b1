//! Exact multivariate polynomials in the coordinates x0..x7.
//!
//! Terms are kept in a BTreeMap under graded lexicographic order, so
//! rendering and iteration are deterministic; zero coefficients are never
//! stored.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Scalar;

/// Number of coordinates.
pub const NVARS: usize = 8;

/// Total-degree cap; exceeding it is a usage error surfaced by the parser
/// and asserted by the arithmetic.
pub const DEGREE_CAP: u32 = 64;

/// Exponent tuple for x0..x7 ordered by total degree, then lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub [u32; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn var(i: usize) -> Self {
        let mut m = [0; NVARS];
        m[i] = 1;
        Monomial(m)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, rhs: &Monomial) -> Monomial {
        let m = Monomial(std::array::from_fn(|i| self.0[i] + rhs.0[i]));
        assert!(m.degree() <= DEGREE_CAP, "monomial degree over cap");
        m
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Polynomial with exact coefficients; no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly<S> {
    terms: BTreeMap<Monomial, S>,
}

impl<S: Scalar> Poly<S> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::ONE, c);
        p
    }

    pub fn var(i: usize) -> Self {
        assert!(i < NVARS, "variable index out of range");
        let mut p = Self::zero();
        p.add_term(Monomial::var(i), S::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: S) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(S::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }

    pub fn scale(&self, s: &S) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, c.clone() * s.clone());
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        out
    }

    /// Formal partial derivative with respect to `x_i`.
    pub fn partial(&self, i: usize) -> Self {
        assert!(i < NVARS, "variable index out of range");
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut m2 = *m;
            m2.0[i] -= 1;
            out.add_term(m2, c.clone() * crate::scalar::int(e as i64));
        }
        out
    }

    /// Substitution homomorphism at a point.
    pub fn eval(&self, x: &[S; NVARS]) -> S {
        let mut acc = S::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t = t * x[i].clone();
                }
            }
            acc += t;
        }
        acc
    }

    /// True if some term involves `x_i`.
    pub fn depends_on(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.0[i] > 0)
    }
}

impl<S: Scalar> fmt::Display for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly_terms(f, self, "", true)
    }
}

/// Renders `p` with an optional basis-symbol suffix on every term, in
/// graded-lex term order. With `leading` unset the caller has already
/// printed something, so the first term gets a connecting sign.
pub(crate) fn write_poly_terms<S: Scalar>(
    f: &mut fmt::Formatter<'_>,
    p: &Poly<S>,
    basis: &str,
    leading: bool,
) -> fmt::Result {
    let mut first = true;
    for (m, c) in p.terms() {
        let neg = c.is_negative();
        let mag = c.abs();
        if first && leading {
            if neg {
                write!(f, "-")?;
            }
        } else if neg {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        first = false;
        let is_const_mono = m.degree() == 0;
        let mut pieces: Vec<String> = Vec::new();
        if !mag.is_one() || (is_const_mono && basis.is_empty()) {
            pieces.push(mag.to_string());
        }
        if !is_const_mono {
            pieces.push(m.to_string());
        }
        if !basis.is_empty() {
            pieces.push(basis.to_string());
        }
        if pieces.is_empty() {
            pieces.push("1".to_string());
        }
        write!(f, "{}", pieces.join("*"))?;
    }
    if first && leading {
        write!(f, "0")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};
    use crate::{Rat, RatPoly};
    use proptest::prelude::*;

    #[test]
    fn degree_and_zero() {
        assert_eq!(RatPoly::zero().degree(), None);
        assert_eq!(RatPoly::one().degree(), Some(0));
        let p = RatPoly::var(1).mul(&RatPoly::var(1)).mul(&RatPoly::var(3));
        assert_eq!(p.degree(), Some(3));
    }

    #[test]
    fn partial_derivative_examples() {
        let p = RatPoly::var(1).mul(&RatPoly::var(1));
        assert_eq!(p.partial(1), RatPoly::var(1).scale(&int::<Rat>(2)));
        assert_eq!(RatPoly::var(1).partial(0), RatPoly::zero());
        // Mixed partials commute.
        let q = RatPoly::var(0).mul(&p).add(&RatPoly::var(2).scale(&ratio(3, 2)));
        assert_eq!(q.partial(0).partial(1), q.partial(1).partial(0));
    }

    #[test]
    fn eval_substitutes() {
        let p = RatPoly::var(2).mul(&RatPoly::var(7)).scale(&int::<Rat>(3));
        let mut x: [Rat; NVARS] = std::array::from_fn(|_| int(0));
        x[2] = int(3);
        x[7] = int(2);
        assert_eq!(p.eval(&x), int::<Rat>(18));
        assert_eq!(RatPoly::zero().eval(&x), int::<Rat>(0));
    }

    #[test]
    fn display_is_graded_lex() {
        let p = RatPoly::var(1)
            .add(&RatPoly::var(0).mul(&RatPoly::var(0)).scale(&int::<Rat>(-2)))
            .add(&RatPoly::constant(ratio(1, 3)));
        assert_eq!(p.to_string(), "1/3 + x1 - 2*x0^2");
    }

    fn small_poly() -> impl Strategy<Value = RatPoly> {
        proptest::collection::vec(
            (proptest::collection::vec(0u32..3, NVARS), -4i64..=4),
            0..5,
        )
        .prop_map(|terms| {
            let mut p = RatPoly::zero();
            for (exps, c) in terms {
                let m = Monomial(std::array::from_fn(|i| exps[i]));
                p.add_term(m, int(c));
            }
            p
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn leibniz_rule(p in small_poly(), q in small_poly(), i in 0usize..NVARS) {
            let lhs = p.mul(&q).partial(i);
            let rhs = p.partial(i).mul(&q).add(&p.mul(&q.partial(i)));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn eval_is_ring_hom(p in small_poly(), q in small_poly(), pt in proptest::collection::vec(-3i64..=3, NVARS)) {
            let x: [Rat; NVARS] = std::array::from_fn(|i| int(pt[i]));
            prop_assert_eq!(p.mul(&q).eval(&x), p.eval(&x) * q.eval(&x));
            prop_assert_eq!(p.add(&q).eval(&x), p.eval(&x) + q.eval(&x));
        }
    }
}
