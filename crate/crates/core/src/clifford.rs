//! The Clifford algebra Cl(0,7): dense 128-component multivectors over
//! 7-bit blade masks, with `e_i e_j + e_j e_i = -2 delta_ij` for the seven
//! anticommuting generators and `e_0 = 1` the empty blade.
//!
//! Blade products are computed by sorted-merge swap counting plus a sign for
//! each squared generator; the test suite carries an independent brute-force
//! sign oracle that multiplies generator sequences one transposition at a
//! time.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::octonion::Octonion;
use crate::scalar::{ratio, Scalar};
use crate::Error;

/// Number of basis blades of Cl(0,7).
pub const BLADES: usize = 128;

/// Mask of the pseudoscalar `e_{1..7}`.
pub const PSEUDOSCALAR_MASK: u8 = 0x7f;

/// Basis blade of Cl(0,7), encoded as a 7-bit set: bit `i` set means the
/// generator `e_{i+1}` is a factor. The empty mask is the scalar blade.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Blade(pub u8);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    /// The generator `e_i`, `1 <= i <= 7`.
    pub fn generator(i: usize) -> Self {
        assert!((1..=7).contains(&i), "generator index out of range");
        Blade(1 << (i - 1))
    }

    pub fn grade(self) -> u32 {
        self.0.count_ones()
    }

    /// Product of two basis blades: the sign and the symmetric-difference
    /// blade. The sign counts the transpositions needed to interleave the
    /// factors in index order, times `(-1)^|A & B|` for the squared
    /// generators (negative-definite signature).
    pub fn mul(self, rhs: Blade) -> (i8, Blade) {
        let (a, b) = (self.0, rhs.0);
        let mut swaps = 0u32;
        for j in 0..7 {
            if b & (1 << j) != 0 {
                swaps += (a >> (j + 1)).count_ones();
            }
        }
        let sign = if (swaps + (a & b).count_ones()) % 2 == 0 { 1 } else { -1 };
        (sign, Blade(a ^ b))
    }

    /// Generator indices (ascending) making up the blade.
    pub fn generators(self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (1..=7usize).filter(move |i| mask & (1 << (i - 1)) != 0)
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "1");
        }
        write!(f, "e")?;
        for i in self.generators() {
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

/// Dense element of Cl(0,7): one exact coefficient per blade mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multivector<S> {
    c: Box<[S; BLADES]>,
}

impl<S: Scalar> Multivector<S> {
    pub fn zero() -> Self {
        Self { c: Box::new(std::array::from_fn(|_| S::zero())) }
    }

    pub fn one() -> Self {
        Self::scalar(S::one())
    }

    pub fn scalar(s: S) -> Self {
        let mut m = Self::zero();
        m.c[0] = s;
        m
    }

    pub fn basis_blade(b: Blade) -> Self {
        let mut m = Self::zero();
        m.c[b.0 as usize] = S::one();
        m
    }

    /// Product of generators in the given order, e.g. `[1, 7, 6]` builds
    /// `e1 e7 e6 = -e167`.
    pub fn from_generators(gens: &[usize]) -> Self {
        let mut acc = Self::one();
        for &g in gens {
            acc = acc.mul(&Self::basis_blade(Blade::generator(g)));
        }
        acc
    }

    pub fn coeff(&self, b: Blade) -> &S {
        &self.c[b.0 as usize]
    }

    pub fn set_coeff(&mut self, b: Blade, s: S) {
        self.c[b.0 as usize] = s;
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    /// Nonzero terms as `(blade, coefficient)` pairs in mask order.
    pub fn terms(&self) -> impl Iterator<Item = (Blade, &S)> {
        self.c
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (Blade(i as u8), v))
    }

    pub fn scale(&self, s: &S) -> Self {
        Self { c: Box::new(std::array::from_fn(|i| self.c[i].clone() * s.clone())) }
    }

    /// Geometric product, the bilinear extension of [`Blade::mul`].
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for a in 0..BLADES {
            if self.c[a].is_zero() {
                continue;
            }
            for b in 0..BLADES {
                if rhs.c[b].is_zero() {
                    continue;
                }
                let (sign, m) = Blade(a as u8).mul(Blade(b as u8));
                let term = self.c[a].clone() * rhs.c[b].clone();
                if sign > 0 {
                    out.c[m.0 as usize] += term;
                } else {
                    out.c[m.0 as usize] -= term;
                }
            }
        }
        out
    }

    /// Keeps exactly the coefficients whose blade has the given grade.
    pub fn grade_project(&self, k: u32) -> Self {
        let mut out = Self::zero();
        for i in 0..BLADES {
            if Blade(i as u8).grade() == k && !self.c[i].is_zero() {
                out.c[i] = self.c[i].clone();
            }
        }
        out
    }

    /// Grades 0 and 1 together.
    pub fn paravector_part(&self) -> Self {
        let mut out = Self::zero();
        for i in 0..BLADES {
            if Blade(i as u8).grade() <= 1 {
                out.c[i] = self.c[i].clone();
            }
        }
        out
    }

    pub fn is_paravector(&self) -> bool {
        self.terms().all(|(b, _)| b.grade() <= 1)
    }

    /// Identifies an octonion with a paravector: component `i` with the
    /// grade-1 blade `e_i`, the real part with the scalar blade.
    pub fn from_octonion(x: &Octonion<S>) -> Self {
        let mut m = Self::zero();
        m.c[0] = x.real_part();
        for i in 1..8 {
            m.c[Blade::generator(i).0 as usize] = x.component(i).clone();
        }
        m
    }

    /// Inverse of [`Multivector::from_octonion`]; fails on blades of grade
    /// above 1.
    pub fn try_to_octonion(&self) -> Result<Octonion<S>, Error> {
        if let Some((b, _)) = self.terms().find(|(b, _)| b.grade() > 1) {
            return Err(Error::NotParavector { grade: b.grade() });
        }
        let mut c: [S; 8] = std::array::from_fn(|_| S::zero());
        c[0] = self.c[0].clone();
        for i in 1..8 {
            c[i] = self.c[Blade::generator(i).0 as usize].clone();
        }
        Ok(Octonion::from_components(c))
    }
}

impl<S: Scalar> Add for &Multivector<S> {
    type Output = Multivector<S>;
    fn add(self, rhs: Self) -> Multivector<S> {
        Multivector { c: Box::new(std::array::from_fn(|i| self.c[i].clone() + rhs.c[i].clone())) }
    }
}

impl<S: Scalar> Sub for &Multivector<S> {
    type Output = Multivector<S>;
    fn sub(self, rhs: Self) -> Multivector<S> {
        Multivector { c: Box::new(std::array::from_fn(|i| self.c[i].clone() - rhs.c[i].clone())) }
    }
}

impl<S: Scalar> Neg for &Multivector<S> {
    type Output = Multivector<S>;
    fn neg(self) -> Multivector<S> {
        Multivector { c: Box::new(std::array::from_fn(|i| -self.c[i].clone())) }
    }
}

impl<S: Scalar> Mul for &Multivector<S> {
    type Output = Multivector<S>;
    fn mul(self, rhs: Self) -> Multivector<S> {
        self.mul(rhs)
    }
}

impl<S: Scalar> fmt::Display for Multivector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::octonion::write_basis_sum(f, self.c.iter().enumerate(), |i| {
            if i == 0 { String::new() } else { Blade(i as u8).to_string() }
        })
    }
}

/// Wedge product of two grade-1 multivectors:
/// `sum_{i<j} (x_i y_j - x_j y_i) e_ij`. Panics unless both inputs are pure
/// 1-vectors.
pub fn wedge<S: Scalar>(x: &Multivector<S>, y: &Multivector<S>) -> Multivector<S> {
    assert!(
        x.terms().all(|(b, _)| b.grade() == 1) && y.terms().all(|(b, _)| b.grade() == 1),
        "wedge requires grade-1 inputs"
    );
    let mut out = Multivector::zero();
    for i in 1..=7usize {
        for j in (i + 1)..=7usize {
            let bi = Blade::generator(i);
            let bj = Blade::generator(j);
            let c = x.coeff(bi).clone() * y.coeff(bj).clone()
                - x.coeff(bj).clone() * y.coeff(bi).clone();
            if !c.is_zero() {
                out.set_coeff(Blade(bi.0 | bj.0), c);
            }
        }
    }
    out
}

/// The structural constants of the octonion/Clifford bridge.
///
/// `w` is the trivector `e123 + e145 + e176 + e246 + e257 + e347 + e365`
/// (built verbatim as generator products), `pseudoscalar` is `e_{1..7}`,
/// `w_inv = (w - 6 e_{1..7}) / 7`, and `i_minus`/`i_plus` are the primitive
/// idempotents `(1 + w e_{1..7})(1 -+ e_{1..7}) / 16`.
pub struct Constants<S> {
    pub w: Multivector<S>,
    pub w_inv: Multivector<S>,
    pub pseudoscalar: Multivector<S>,
    pub i_plus: Multivector<S>,
    pub i_minus: Multivector<S>,
}

impl<S: Scalar> Constants<S> {
    pub fn new() -> Self {
        let triples: [[usize; 3]; 7] =
            [[1, 2, 3], [1, 4, 5], [1, 7, 6], [2, 4, 6], [2, 5, 7], [3, 4, 7], [3, 6, 5]];
        let mut w = Multivector::zero();
        for t in &triples {
            w = &w + &Multivector::from_generators(t);
        }
        let pseudoscalar = Multivector::basis_blade(Blade(PSEUDOSCALAR_MASK));
        let w_inv = (&w - &pseudoscalar.scale(&crate::scalar::int(6))).scale(&ratio(1, 7));
        let one = Multivector::one();
        let we = w.mul(&pseudoscalar);
        let sixteenth = ratio::<S>(1, 16);
        let i_plus = (&one + &we).mul(&(&one + &pseudoscalar)).scale(&sixteenth);
        let i_minus = (&one + &we).mul(&(&one - &pseudoscalar)).scale(&sixteenth);
        Self { w, w_inv, pseudoscalar, i_plus, i_minus }
    }
}

impl<S: Scalar> Default for Constants<S> {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use crate::{Mv, Rat};
    use proptest::prelude::*;

    /// Brute-force blade sign: concatenate the generator sequences, sort by
    /// adjacent transpositions (each flips the sign), then cancel adjacent
    /// equal generators (each contributes -1).
    fn brute_sign(a: u8, b: u8) -> (i8, u8) {
        let mut seq: Vec<usize> = Blade(a).generators().chain(Blade(b).generators()).collect();
        let mut sign = 1i8;
        let mut changed = true;
        while changed {
            changed = false;
            for t in 0..seq.len().saturating_sub(1) {
                if seq[t] > seq[t + 1] {
                    seq.swap(t, t + 1);
                    sign = -sign;
                    changed = true;
                }
            }
        }
        let mut out: Vec<usize> = Vec::new();
        for g in seq {
            if out.last() == Some(&g) {
                out.pop();
                sign = -sign;
            } else {
                out.push(g);
            }
        }
        let mut mask = 0u8;
        for g in out {
            mask |= 1 << (g - 1);
        }
        (sign, mask)
    }

    #[test]
    fn blade_sign_matches_brute_force() {
        for a in 0..128u8 {
            for b in 0..128u8 {
                let (s, m) = Blade(a).mul(Blade(b));
                assert_eq!((s, m.0), brute_sign(a, b), "a={a:#b} b={b:#b}");
            }
        }
    }

    #[test]
    fn blade_examples() {
        let e1 = Blade::generator(1);
        let e2 = Blade::generator(2);
        assert_eq!(e1.mul(e1), (-1, Blade::SCALAR));
        assert_eq!(e1.mul(e2), (1, Blade(0b11)));
        assert_eq!(e2.mul(e1), (-1, Blade(0b11)));
        // e12 * e23 = e13 with positive sign.
        assert_eq!(Blade(0b011).mul(Blade(0b110)), (1, Blade(0b101)));
    }

    #[test]
    fn generator_relations() {
        for i in 1..=7 {
            for j in 1..=7 {
                let ei = Mv::basis_blade(Blade::generator(i));
                let ej = Mv::basis_blade(Blade::generator(j));
                let anti = &ei.mul(&ej) + &ej.mul(&ei);
                let expected = if i == j {
                    Mv::scalar(int::<Rat>(-2))
                } else {
                    Mv::zero()
                };
                assert_eq!(anti, expected);
            }
        }
    }

    #[test]
    fn product_examples() {
        // A paravector vector squared is minus its squared length.
        let x = &Mv::basis_blade(Blade::generator(1)).scale(&int::<Rat>(2))
            + &Mv::basis_blade(Blade::generator(5)).scale(&int::<Rat>(3));
        assert_eq!(x.mul(&x), Mv::scalar(int::<Rat>(-13)));
        // The pseudoscalar squares to +1.
        let e = Mv::basis_blade(Blade(PSEUDOSCALAR_MASK));
        assert_eq!(e.mul(&e), Mv::one());
        // (e1 e2)(e2 e1 e3) = e3.
        let lhs = Mv::from_generators(&[1, 2]).mul(&Mv::from_generators(&[2, 1, 3]));
        assert_eq!(lhs, Mv::basis_blade(Blade::generator(3)));
    }

    #[test]
    fn grade_projection_examples() {
        let a = &(&Mv::from_generators(&[1, 2]) + &Mv::basis_blade(Blade::generator(3)))
            + &Mv::scalar(int::<Rat>(5));
        assert_eq!(a.grade_project(1), Mv::basis_blade(Blade::generator(3)));
        assert_eq!(a.grade_project(0), Mv::scalar(int::<Rat>(5)));
        // Projections are idempotent and sum to the identity.
        let mut total = Mv::zero();
        for k in 0..=7 {
            let p = a.grade_project(k);
            assert_eq!(p.grade_project(k), p);
            total = &total + &p;
        }
        assert_eq!(total, a);
    }

    #[test]
    fn wedge_examples() {
        let e1 = Mv::basis_blade(Blade::generator(1));
        let e2 = Mv::basis_blade(Blade::generator(2));
        assert_eq!(wedge(&e1, &e2), Mv::from_generators(&[1, 2]));
        let v = &e1 + &e2.scale(&int::<Rat>(4));
        assert_eq!(wedge(&v, &v), Mv::zero());
    }

    #[test]
    #[should_panic(expected = "grade-1")]
    fn wedge_rejects_nonvector() {
        let _ = wedge(&Mv::one(), &Mv::basis_blade(Blade::generator(2)));
    }

    #[test]
    fn constants_identities() {
        let k = Constants::<Rat>::new();
        assert_eq!(k.w.mul(&k.w_inv), Mv::one());
        assert_eq!(k.w_inv.mul(&k.w), Mv::one());
        assert_eq!(k.i_minus.mul(&k.i_minus), k.i_minus);
        assert_eq!(k.i_plus.mul(&k.i_plus), k.i_plus);
        // W is a pure 3-vector and W e_{1..7} a pure 4-vector.
        assert_eq!(k.w.grade_project(3), k.w);
        let we = k.w.mul(&k.pseudoscalar);
        assert_eq!(we.grade_project(4), we);
        // 16 I- = 1 - W + W e_{1..7} - e_{1..7}.
        let sixteen = k.i_minus.scale(&int::<Rat>(16));
        let expected = &(&(&Mv::one() - &k.w) + &we) - &k.pseudoscalar;
        assert_eq!(sixteen, expected);
        // I+ + I- = (1 + W e_{1..7}) / 8.
        let sum = &k.i_plus + &k.i_minus;
        assert_eq!(sum, (&Mv::one() + &we).scale(&crate::scalar::ratio(1, 8)));
    }

    #[test]
    fn octonion_paravector_round_trip() {
        let x = crate::Oct::from_components(std::array::from_fn(|i| int::<Rat>(i as i64)));
        let m = Mv::from_octonion(&x);
        assert!(m.is_paravector());
        assert_eq!(m.try_to_octonion().unwrap(), x);
        let bad = Mv::from_generators(&[1, 2]);
        assert!(bad.try_to_octonion().is_err());
    }

    fn sparse_mv() -> impl Strategy<Value = Mv> {
        proptest::collection::vec((0u8..128, -4i64..=4), 0..6).prop_map(|terms| {
            let mut m = Mv::zero();
            for (mask, c) in terms {
                let cur = m.coeff(Blade(mask)).clone();
                m.set_coeff(Blade(mask), cur + int::<Rat>(c));
            }
            m
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn mul_is_associative(a in sparse_mv(), b in sparse_mv(), c in sparse_mv()) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }

        #[test]
        fn paravector_product_decomposes(x in -5i64..=5, rest in proptest::collection::vec(-5i64..=5, 14)) {
            // x y = x0 y0 - x.y + x0 y + y0 x + wedge(x, y) for paravectors.
            let xo = crate::Oct::from_components(std::array::from_fn(|i| {
                if i == 0 { int::<Rat>(x) } else { int::<Rat>(rest[i - 1]) }
            }));
            let yo = crate::Oct::from_components(std::array::from_fn(|i| {
                int::<Rat>(rest[(i + 6) % 14])
            }));
            let xm = Mv::from_octonion(&xo);
            let ym = Mv::from_octonion(&yo);
            let xv = xm.grade_project(1);
            let yv = ym.grade_project(1);
            let dot = xo.vector_part().dot(&yo.vector_part());
            let expected = &(&(&Mv::scalar(xo.real_part() * yo.real_part() - dot)
                + &yv.scale(&xo.real_part()))
                + &xv.scale(&yo.real_part()))
                + &wedge(&xv, &yv);
            prop_assert_eq!(xm.mul(&ym), expected);
        }
    }
}
