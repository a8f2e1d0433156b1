//! Exact octonion and quaternion arithmetic.
//!
//! The octonion product is driven by the hard-coded 8x8 multiplication table
//! [`OCT_TABLE`] over the canonical basis `{1, e1, ..., e7}`; this table is
//! the single ground truth for the whole crate. The quaternion-form product
//! [`mul_quat_form`] and the quaternion-form cross product
//! [`cross_quat_form`] are independent implementations built from
//! 3-dimensional dot and cross products only, so that agreement with the
//! table is a meaningful check rather than a tautology.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::Scalar;

/// Octonion basis products: `OCT_TABLE[i][j] = (sign, k)` means
/// `e_i o e_j = sign * e_k`, with `e_0 = 1`.
pub const OCT_TABLE: [[(i8, usize); 8]; 8] = [
    [(1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7)],
    [(1, 1), (-1, 0), (1, 3), (-1, 2), (1, 5), (-1, 4), (-1, 7), (1, 6)],
    [(1, 2), (-1, 3), (-1, 0), (1, 1), (1, 6), (1, 7), (-1, 4), (-1, 5)],
    [(1, 3), (1, 2), (-1, 1), (-1, 0), (1, 7), (-1, 6), (1, 5), (-1, 4)],
    [(1, 4), (-1, 5), (-1, 6), (-1, 7), (-1, 0), (1, 1), (1, 2), (1, 3)],
    [(1, 5), (1, 4), (-1, 7), (1, 6), (-1, 1), (-1, 0), (-1, 3), (1, 2)],
    [(1, 6), (1, 7), (1, 4), (-1, 5), (-1, 2), (1, 3), (-1, 0), (-1, 1)],
    [(1, 7), (-1, 6), (1, 5), (1, 4), (-1, 3), (-1, 2), (1, 1), (-1, 0)],
];

/// Octonion with exact scalar components over the basis `{1, e1, ..., e7}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Octonion<S> {
    c: [S; 8],
}

impl<S: Scalar> Octonion<S> {
    pub fn zero() -> Self {
        Self { c: std::array::from_fn(|_| S::zero()) }
    }

    pub fn one() -> Self {
        Self::basis(0)
    }

    /// The basis element `e_i` (`e_0 = 1`).
    pub fn basis(i: usize) -> Self {
        let mut o = Self::zero();
        o.c[i] = S::one();
        o
    }

    pub fn scalar(s: S) -> Self {
        let mut o = Self::zero();
        o.c[0] = s;
        o
    }

    pub fn from_components(c: [S; 8]) -> Self {
        Self { c }
    }

    pub fn components(&self) -> &[S; 8] {
        &self.c
    }

    pub fn component(&self, i: usize) -> &S {
        &self.c[i]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    /// True when the real part vanishes.
    pub fn is_vector(&self) -> bool {
        self.c[0].is_zero()
    }

    pub fn real_part(&self) -> S {
        self.c[0].clone()
    }

    /// `x - x_0`, the part spanned by `e1..e7`.
    pub fn vector_part(&self) -> Self {
        let mut o = self.clone();
        o.c[0] = S::zero();
        o
    }

    /// `conj(x) = x_0 - vec(x)`.
    pub fn conj(&self) -> Self {
        let mut o = Self::zero();
        o.c[0] = self.c[0].clone();
        for i in 1..8 {
            o.c[i] = -self.c[i].clone();
        }
        o
    }

    pub fn scale(&self, s: &S) -> Self {
        Self { c: std::array::from_fn(|i| self.c[i].clone() * s.clone()) }
    }

    /// Sum of squared components.
    pub fn norm_sq(&self) -> S {
        self.c.iter().fold(S::zero(), |acc, x| acc + x.clone() * x.clone())
    }

    /// Table-driven octonion product. This is the reference product every
    /// other product route is compared against.
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for i in 0..8 {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..8 {
                if rhs.c[j].is_zero() {
                    continue;
                }
                let (sign, k) = OCT_TABLE[i][j];
                let term = self.c[i].clone() * rhs.c[j].clone();
                if sign > 0 {
                    out.c[k] += term;
                } else {
                    out.c[k] -= term;
                }
            }
        }
        out
    }

    /// Euclidean dot product of two vectors.
    ///
    /// Panics if either argument has a nonzero real part; callers are
    /// expected to pass pure vectors rather than rely on projection.
    pub fn dot(&self, rhs: &Self) -> S {
        assert!(self.is_vector() && rhs.is_vector(), "dot requires pure vectors");
        (1..8).fold(S::zero(), |acc, i| acc + self.c[i].clone() * rhs.c[i].clone())
    }

    /// Seven-dimensional cross product, i.e. the table product restricted to
    /// distinct imaginary basis pairs. Panics on non-vector input.
    pub fn cross(&self, rhs: &Self) -> Self {
        assert!(self.is_vector() && rhs.is_vector(), "cross requires pure vectors");
        let mut out = Self::zero();
        for i in 1..8 {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 1..8 {
                if i == j || rhs.c[j].is_zero() {
                    continue;
                }
                let (sign, k) = OCT_TABLE[i][j];
                let term = self.c[i].clone() * rhs.c[j].clone();
                if sign > 0 {
                    out.c[k] += term;
                } else {
                    out.c[k] -= term;
                }
            }
        }
        out
    }

    /// Splits `x = u + v o e4` into its two quaternion halves.
    pub fn to_quat_form(&self) -> QuatForm<S> {
        QuatForm {
            u: Quaternion { c: std::array::from_fn(|i| self.c[i].clone()) },
            v: Quaternion { c: std::array::from_fn(|i| self.c[4 + i].clone()) },
        }
    }
}

impl<S: Scalar> Add for &Octonion<S> {
    type Output = Octonion<S>;
    fn add(self, rhs: Self) -> Octonion<S> {
        Octonion { c: std::array::from_fn(|i| self.c[i].clone() + rhs.c[i].clone()) }
    }
}

impl<S: Scalar> Sub for &Octonion<S> {
    type Output = Octonion<S>;
    fn sub(self, rhs: Self) -> Octonion<S> {
        Octonion { c: std::array::from_fn(|i| self.c[i].clone() - rhs.c[i].clone()) }
    }
}

impl<S: Scalar> Neg for &Octonion<S> {
    type Output = Octonion<S>;
    fn neg(self) -> Octonion<S> {
        Octonion { c: std::array::from_fn(|i| -self.c[i].clone()) }
    }
}

impl<S: Scalar> Mul for &Octonion<S> {
    type Output = Octonion<S>;
    fn mul(self, rhs: Self) -> Octonion<S> {
        self.mul(rhs)
    }
}

impl<S: Scalar> fmt::Display for Octonion<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_basis_sum(f, self.c.iter().enumerate(), |i| {
            if i == 0 { String::new() } else { format!("e{i}") }
        })
    }
}

/// Renders a signed sum of `coeff * label` terms, omitting unit coefficients
/// next to a label and skipping zeros ("0" for the zero element).
pub(crate) fn write_basis_sum<'a, S: Scalar + 'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (usize, &'a S)>,
    label: impl Fn(usize) -> String,
) -> fmt::Result {
    let mut first = true;
    for (i, c) in terms {
        if c.is_zero() {
            continue;
        }
        let lbl = label(i);
        let neg = c.is_negative();
        let mag = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
            first = false;
        } else if neg {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        if lbl.is_empty() {
            write!(f, "{mag}")?;
        } else if mag.is_one() {
            write!(f, "{lbl}")?;
        } else {
            write!(f, "{mag}*{lbl}")?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// Quaternion over the basis `{1, e1, e2, e3}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quaternion<S> {
    c: [S; 4],
}

impl<S: Scalar> Quaternion<S> {
    pub fn zero() -> Self {
        Self { c: std::array::from_fn(|_| S::zero()) }
    }

    pub fn one() -> Self {
        Self::basis(0)
    }

    pub fn basis(i: usize) -> Self {
        let mut q = Self::zero();
        q.c[i] = S::one();
        q
    }

    pub fn from_components(c: [S; 4]) -> Self {
        Self { c }
    }

    pub fn components(&self) -> &[S; 4] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn conj(&self) -> Self {
        Self {
            c: [
                self.c[0].clone(),
                -self.c[1].clone(),
                -self.c[2].clone(),
                -self.c[3].clone(),
            ],
        }
    }

    /// Quaternion product; the table restricted to indices 0..3 is closed,
    /// which makes the embedding into octonions a product homomorphism.
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for i in 0..4 {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                if rhs.c[j].is_zero() {
                    continue;
                }
                let (sign, k) = OCT_TABLE[i][j];
                debug_assert!(k < 4);
                let term = self.c[i].clone() * rhs.c[j].clone();
                if sign > 0 {
                    out.c[k] += term;
                } else {
                    out.c[k] -= term;
                }
            }
        }
        out
    }

    /// Embeds into the octonions with components 4..7 zero.
    pub fn embed(&self) -> Octonion<S> {
        let mut o = Octonion::zero();
        for i in 0..4 {
            o.c[i] = self.c[i].clone();
        }
        o
    }

    fn vec3(&self) -> [S; 3] {
        [self.c[1].clone(), self.c[2].clone(), self.c[3].clone()]
    }
}

fn dot3<S: Scalar>(a: &[S; 3], b: &[S; 3]) -> S {
    a.iter().zip(b).fold(S::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

fn cross3<S: Scalar>(a: &[S; 3], b: &[S; 3]) -> [S; 3] {
    [
        a[1].clone() * b[2].clone() - a[2].clone() * b[1].clone(),
        a[2].clone() * b[0].clone() - a[0].clone() * b[2].clone(),
        a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone(),
    ]
}

/// The quaternion form `x = u + v o e4` of an octonion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuatForm<S> {
    pub u: Quaternion<S>,
    pub v: Quaternion<S>,
}

impl<S: Scalar> QuatForm<S> {
    /// Reconstructs `u + v o e4`.
    pub fn to_octonion(&self) -> Octonion<S> {
        let e4 = Octonion::basis(4);
        &self.u.embed() + &self.v.embed().mul(&e4)
    }
}

/// Left/right sides of the six `e4` product identities, evaluated for the
/// given quaternions: `e4 o u = conj(u) o e4`, `e4 o (u o e4) = -conj(u)`,
/// `(u o e4) o e4 = -u`, `u o (v o e4) = (v o u) o e4`,
/// `(u o e4) o v = (u o conj(v)) o e4`, `(u o e4) o (v o e4) = -conj(v) o u`.
///
/// Each pair's left side is a table product of embeddings; the right side is
/// assembled from quaternion arithmetic, so the two routes are independent.
pub fn e4_identity_pairs<S: Scalar>(
    u: &Quaternion<S>,
    v: &Quaternion<S>,
) -> [(Octonion<S>, Octonion<S>); 6] {
    let e4 = Octonion::basis(4);
    let ue = u.embed();
    let ve = v.embed();
    let ue4 = ue.mul(&e4);
    let ve4 = ve.mul(&e4);
    [
        (e4.mul(&ue), u.conj().embed().mul(&e4)),
        (e4.mul(&ue4), -&u.conj().embed()),
        (ue4.mul(&e4), -&ue),
        (ue.mul(&ve4), v.mul(u).embed().mul(&e4)),
        (ue4.mul(&ve), u.mul(&v.conj()).embed().mul(&e4)),
        (ue4.mul(&ve4), -&v.conj().mul(u).embed()),
    ]
}

/// Cross product of two octonion vectors computed entirely from
/// 3-dimensional dot and cross products of the quaternion-form halves.
/// Panics on non-vector input.
pub fn cross_quat_form<S: Scalar>(x: &Octonion<S>, y: &Octonion<S>) -> Octonion<S> {
    assert!(x.is_vector() && y.is_vector(), "cross requires pure vectors");
    let xf = x.to_quat_form();
    let yf = y.to_quat_form();
    let (uv, vv) = (xf.u.vec3(), xf.v.vec3());
    let (av, bv) = (yf.u.vec3(), yf.v.vec3());
    let v0 = xf.v.c[0].clone();
    let b0 = yf.v.c[0].clone();

    let ua = cross3(&uv, &av);
    let vb = cross3(&vv, &bv);
    let ub = cross3(&uv, &bv);
    let va = cross3(&vv, &av);

    let mut out = Octonion::zero();
    for i in 0..3 {
        // span{e1,e2,e3}: v0*b - v*b0 + u x a - v x b
        out.c[1 + i] = v0.clone() * bv[i].clone() - vv[i].clone() * b0.clone()
            + ua[i].clone()
            - vb[i].clone();
        // span{e5,e6,e7}: (u*b0 - v0*a - u x b - v x a) o e4
        out.c[5 + i] = uv[i].clone() * b0.clone() - v0.clone() * av[i].clone()
            - ub[i].clone()
            - va[i].clone();
    }
    // span{e4}: (v.a - u.b) e4
    out.c[4] = dot3(&vv, &av) - dot3(&uv, &bv);
    out
}

/// Octonion product assembled from the quaternion forms of both factors,
/// using only 3-dimensional dot/cross products and quaternion components.
pub fn mul_quat_form<S: Scalar>(x: &QuatForm<S>, y: &QuatForm<S>) -> Octonion<S> {
    let (uv, vv) = (x.u.vec3(), x.v.vec3());
    let (av, bv) = (y.u.vec3(), y.v.vec3());
    let u0 = x.u.c[0].clone();
    let v0 = x.v.c[0].clone();
    let a0 = y.u.c[0].clone();
    let b0 = y.v.c[0].clone();

    let ua = cross3(&uv, &av);
    let vb = cross3(&vv, &bv);
    let ub = cross3(&uv, &bv);
    let va = cross3(&vv, &av);

    let mut out = Octonion::zero();
    out.c[0] = u0.clone() * a0.clone() - v0.clone() * b0.clone() - dot3(&uv, &av) - dot3(&vv, &bv);
    for i in 0..3 {
        out.c[1 + i] = u0.clone() * av[i].clone() + a0.clone() * uv[i].clone()
            + v0.clone() * bv[i].clone()
            - vv[i].clone() * b0.clone()
            + ua[i].clone()
            - vb[i].clone();
        out.c[5 + i] = u0.clone() * bv[i].clone() + a0.clone() * vv[i].clone()
            + uv[i].clone() * b0.clone()
            - v0.clone() * av[i].clone()
            - ub[i].clone()
            - va[i].clone();
    }
    out.c[4] = u0 * b0 + a0 * v0 + dot3(&vv, &av) - dot3(&uv, &bv);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use crate::{Oct, Quat, Rat};

    fn o(i: usize) -> Oct {
        Oct::basis(i)
    }

    #[test]
    fn basis_products_match_table() {
        // e1 o e2 = e3 and the identity row, straight from the table.
        assert_eq!(o(1).mul(&o(2)), o(3));
        for i in 0..8 {
            assert_eq!(o(0).mul(&o(i)), o(i));
            assert_eq!(o(i).mul(&o(0)), o(i));
        }
    }

    #[test]
    fn non_associativity_witness() {
        // (e1 o e2) o e4 = e7 while e1 o (e2 o e4) = -e7.
        assert_eq!(o(1).mul(&o(2)).mul(&o(4)), o(7));
        assert_eq!(o(1).mul(&o(2).mul(&o(4))), -&o(7));
    }

    #[test]
    fn anticommutation_and_squares() {
        for i in 1..8 {
            assert_eq!(o(i).mul(&o(i)), -&Oct::one());
            for j in 1..8 {
                if i != j {
                    assert_eq!(o(i).mul(&o(j)), -&o(j).mul(&o(i)));
                }
            }
        }
    }

    #[test]
    fn conj_involution() {
        let x = Oct::from_components(std::array::from_fn(|i| int::<Rat>(i as i64 - 3)));
        assert_eq!(x.conj().conj(), x);
        let two_re = Oct::scalar(int::<Rat>(2) * x.real_part());
        assert_eq!(x.conj(), &two_re - &x);
    }

    #[test]
    fn cross_and_dot_basics() {
        assert_eq!(o(1).vector_part().cross(&o(2)), o(3));
        let v = &o(4) + &o(7);
        assert_eq!(v.cross(&v), Oct::zero());
        assert_eq!(o(4).dot(&o(4)), int::<Rat>(1));
        assert_eq!(o(4).cross(&o(4)), Oct::zero());
    }

    #[test]
    #[should_panic(expected = "pure vectors")]
    fn cross_rejects_nonvector() {
        let x = &Oct::one() + &o(1);
        let _ = x.cross(&o(2));
    }

    #[test]
    fn quat_form_round_trip() {
        // e5 = e1 o e4, so e5 has quaternion form (0, e1).
        let qf = o(5).to_quat_form();
        assert_eq!(qf.u, Quat::zero());
        assert_eq!(qf.v, Quat::basis(1));
        assert_eq!(qf.to_octonion(), o(5));

        assert_eq!(Oct::one().to_quat_form().u, Quat::one());
        assert_eq!(Oct::one().to_quat_form().v, Quat::zero());
        let qf4 = o(4).to_quat_form();
        assert_eq!((qf4.u.clone(), qf4.v.clone()), (Quat::zero(), Quat::one()));
        for i in 0..8 {
            assert_eq!(o(i).to_quat_form().to_octonion(), o(i));
        }
    }

    #[test]
    fn quaternion_embedding_is_homomorphism() {
        for i in 0..4 {
            for j in 0..4 {
                let qi = Quat::basis(i);
                let qj = Quat::basis(j);
                assert_eq!(qi.mul(&qj).embed(), qi.embed().mul(&qj.embed()));
            }
        }
    }

    #[test]
    fn e4_identity_examples() {
        // u = e1: both sides of the first identity are -e5.
        let pairs = e4_identity_pairs(&Quat::basis(1), &Quat::zero());
        assert_eq!(pairs[0].0, -&o(5));
        assert_eq!(pairs[0].1, -&o(5));
        // u = 1: e4 o (1 o e4) = -1.
        let pairs = e4_identity_pairs(&Quat::one(), &Quat::zero());
        assert_eq!(pairs[1].0, -&Oct::one());
        assert_eq!(pairs[1].1, -&Oct::one());
        // u = e2, v = e3: (u o e4) o (v o e4) = -e1 on both sides.
        let pairs = e4_identity_pairs(&Quat::basis(2), &Quat::basis(3));
        assert_eq!(pairs[5].0, -&o(1));
        assert_eq!(pairs[5].1, -&o(1));
    }

    #[test]
    fn cross_quat_form_examples() {
        // e1 x e4 = e1 o e4 = e5.
        assert_eq!(cross_quat_form(&o(1), &o(4)), o(5));
        // e4 x e5 = e1 (second factor is e1 o e4).
        assert_eq!(cross_quat_form(&o(4), &o(5)), o(1));
        assert_eq!(cross_quat_form(&o(7), &o(7)), Oct::zero());
    }

    #[test]
    fn mul_quat_form_examples() {
        let e4f = o(4).to_quat_form();
        assert_eq!(mul_quat_form(&e4f, &e4f), -&Oct::one());
        assert_eq!(mul_quat_form(&o(1).to_quat_form(), &e4f), o(5));
        let y = Oct::from_components(std::array::from_fn(|i| int::<Rat>(2 * i as i64 - 5)));
        assert_eq!(mul_quat_form(&Oct::one().to_quat_form(), &y.to_quat_form()), y);
    }

    #[test]
    fn display_rendering() {
        let x = &(&Oct::one() - &o(4).scale(&int::<Rat>(2))) + &o(1);
        assert_eq!(x.to_string(), "1 + e1 - 2*e4");
        assert_eq!(Oct::zero().to_string(), "0");
        assert_eq!((-&o(3)).to_string(), "-e3");
    }
}
