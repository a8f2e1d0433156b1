//! The octonion/Clifford bridge: the octonion product recovered inside
//! Cl(0,7) through the trivector `W` and through the primitive idempotent,
//! and the eight graded identities expressing `16 [a b I]_k` in closed form.

use crate::clifford::{wedge, Constants, Multivector};
use crate::octonion::Octonion;
use crate::scalar::{int, Scalar};

/// `a o b = [a b (1 - W)]_{0,1}` for paravectors `a`, `b` (octonions under
/// the component-wise identification).
pub fn oct_via_w<S: Scalar>(a: &Octonion<S>, b: &Octonion<S>) -> Octonion<S> {
    let k = Constants::new();
    let am = Multivector::from_octonion(a);
    let bm = Multivector::from_octonion(b);
    let ab = am.mul(&bm);
    let prod = &ab - &ab.mul(&k.w);
    prod.paravector_part().try_to_octonion().expect("grades 0,1 form a paravector")
}

/// `a o b = 16 [a b I-]_{0,1}`.
pub fn oct_via_idempotent<S: Scalar>(a: &Octonion<S>, b: &Octonion<S>) -> Octonion<S> {
    let k = Constants::new();
    let am = Multivector::from_octonion(a);
    let bm = Multivector::from_octonion(b);
    let abi = am.mul(&bm).mul(&k.i_minus);
    abi.paravector_part()
        .scale(&int(16))
        .try_to_octonion()
        .expect("grades 0,1 form a paravector")
}

/// `a x b = -[(a ^ b) W]_1` for pure vectors. Panics on non-vector input.
pub fn cross_via_w<S: Scalar>(a: &Octonion<S>, b: &Octonion<S>) -> Octonion<S> {
    assert!(a.is_vector() && b.is_vector(), "cross requires pure vectors");
    let k = Constants::new();
    let am = Multivector::from_octonion(a);
    let bm = Multivector::from_octonion(b);
    let w1 = wedge(&am, &bm).mul(&k.w).grade_project(1);
    (-&w1).try_to_octonion().expect("grade 1 is a paravector")
}

/// One grade of the idempotent product, with the direct computation on one
/// side and the closed form on the other.
#[derive(Clone, Debug)]
pub struct GradedIdentity<S> {
    pub grade: u32,
    /// `16 [a b I-]_k` computed by multiplying out `a b I-`.
    pub direct: Multivector<S>,
    /// The closed form assembled from dot, wedge, `W`, and `e_{1..7}`.
    pub closed_form: Multivector<S>,
}

impl<S: Scalar> GradedIdentity<S> {
    pub fn holds(&self) -> bool {
        self.direct == self.closed_form
    }
}

/// All eight graded identities for a pair of paravectors, together with the
/// vanishing symmetry between grades `k` and `7-k` and, when the scalar part
/// vanishes, the pairwise equivalence of the grade-2..5 vanishing flags.
#[derive(Clone, Debug)]
pub struct GradedParts<S> {
    pub parts: Vec<GradedIdentity<S>>,
    /// `[abI]_k = 0  iff  [abI]_{7-k} = 0` held for every `k`.
    pub symmetry_holds: bool,
    /// When `[abI]_0 = 0`: whether the grade-2,3,4,5 flags all agree.
    pub low_grade_equivalence: Option<bool>,
}

impl<S: Scalar> GradedParts<S> {
    pub fn all_hold(&self) -> bool {
        self.parts.iter().all(|p| p.holds())
    }
}

/// Computes `16 [a b I-]_k` directly for every grade and compares with the
/// closed forms:
///
/// ```text
/// 16[abI]_0 =  a0 b0 - a.b
/// 16[abI]_1 =  a0 b + a b0 - [(a^b)W]_1
/// 16[abI]_2 =  a^b - [(a0 b + a b0)W]_2 + [(a^b) W e']_2
/// 16[abI]_3 = -(a0 b0 - a.b) W + [(a0 b + a b0) W e']_3 - [(a^b)W]_3
/// 16[abI]_4 =  (a0 b0 - a.b) W e' - [(a0 b + a b0)W]_4 + [(a^b) W e']_4
/// 16[abI]_5 =  [(a0 b + a b0) W e']_5 - [(a^b)W]_5 - (a^b) e'
/// 16[abI]_6 = -(a0 b + a b0) e' + [(a^b) W e']_6
/// 16[abI]_7 = -(a0 b0 - a.b) e'
/// ```
///
/// with `e' = e_{1..7}`. The two sides share no code: the direct route
/// multiplies `a b I-` out, the closed forms never touch the idempotent.
pub fn graded_parts<S: Scalar>(a: &Octonion<S>, b: &Octonion<S>) -> GradedParts<S> {
    let k = Constants::new();
    let am = Multivector::from_octonion(a);
    let bm = Multivector::from_octonion(b);
    let abi = am.mul(&bm).mul(&k.i_minus);

    let avec = am.grade_project(1);
    let bvec = bm.grade_project(1);
    let scalar = a.real_part() * b.real_part() - a.vector_part().dot(&b.vector_part());
    let s = Multivector::scalar(scalar);
    let m1 = &bvec.scale(&a.real_part()) + &avec.scale(&b.real_part());
    let wv = wedge(&avec, &bvec);
    let e = &k.pseudoscalar;
    let we = k.w.mul(e);

    let m1w = m1.mul(&k.w);
    let m1we = m1.mul(&we);
    let wvw = wv.mul(&k.w);
    let wvwe = wv.mul(&we);

    let closed: [Multivector<S>; 8] = [
        s.clone(),
        &m1 - &wvw.grade_project(1),
        &(&wv - &m1w.grade_project(2)) + &wvwe.grade_project(2),
        &(&(-&s.mul(&k.w)) + &m1we.grade_project(3)) - &wvw.grade_project(3),
        &(&s.mul(&we) - &m1w.grade_project(4)) + &wvwe.grade_project(4),
        &(&m1we.grade_project(5) - &wvw.grade_project(5)) - &wv.mul(e),
        &(-&m1.mul(e)) + &wvwe.grade_project(6),
        -&s.mul(e),
    ];

    let parts: Vec<GradedIdentity<S>> = closed
        .into_iter()
        .enumerate()
        .map(|(g, cf)| GradedIdentity {
            grade: g as u32,
            direct: abi.grade_project(g as u32).scale(&int(16)),
            closed_form: cf,
        })
        .collect();

    let vanish: Vec<bool> = parts.iter().map(|p| p.direct.is_zero()).collect();
    let symmetry_holds = (0..8).all(|g| vanish[g] == vanish[7 - g]);
    let low_grade_equivalence = if vanish[0] {
        Some((2..=5).all(|g| vanish[g] == vanish[2]))
    } else {
        None
    };

    GradedParts { parts, symmetry_holds, low_grade_equivalence }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::Blade;
    use crate::scalar::int;
    use crate::{Mv, Oct, Rat};

    fn o(i: usize) -> Oct {
        Oct::basis(i)
    }

    #[test]
    fn product_via_w_on_basis() {
        assert_eq!(oct_via_w(&o(1), &o(2)), o(3));
        let x = Oct::from_components(std::array::from_fn(|i| int::<Rat>(3 - i as i64)));
        assert_eq!(oct_via_w(&Oct::one(), &x), x);
        for i in 0..8 {
            for j in 0..8 {
                assert_eq!(oct_via_w(&o(i), &o(j)), o(i).mul(&o(j)), "pair ({i},{j})");
            }
        }
    }

    #[test]
    fn product_via_idempotent_on_basis() {
        assert_eq!(oct_via_idempotent(&o(4), &o(4)), -&Oct::one());
        assert_eq!(oct_via_idempotent(&Oct::one(), &Oct::one()), Oct::one());
        for i in 0..8 {
            for j in 0..8 {
                assert_eq!(oct_via_idempotent(&o(i), &o(j)), o(i).mul(&o(j)), "pair ({i},{j})");
            }
        }
    }

    #[test]
    fn cross_via_w_on_basis() {
        assert_eq!(cross_via_w(&o(1), &o(2)), o(3));
        let v = &o(3) + &o(6);
        assert_eq!(cross_via_w(&v, &v), Oct::zero());
        for i in 1..8 {
            for j in 1..8 {
                assert_eq!(cross_via_w(&o(i), &o(j)), o(i).vector_part().cross(&o(j)), "({i},{j})");
            }
        }
    }

    #[test]
    fn graded_parts_basis_examples() {
        // a = b = e1: a0 b0 - a.b = -1, so grade 7 has closed form +e_{1..7}.
        let gp = graded_parts(&o(1), &o(1));
        assert!(gp.all_hold());
        assert_eq!(gp.parts[7].closed_form, Mv::basis_blade(Blade(0x7f)));
        // a = b = 1: grade 0 is the scalar 1.
        let gp = graded_parts(&Oct::one(), &Oct::one());
        assert!(gp.all_hold());
        assert_eq!(gp.parts[0].closed_form, Mv::one());
        assert!(gp.symmetry_holds);
    }

    #[test]
    fn graded_parts_all_basis_pairs() {
        for i in 0..8 {
            for j in 0..8 {
                let gp = graded_parts(&o(i), &o(j));
                assert!(gp.all_hold(), "graded identity failed on ({i},{j})");
                assert!(gp.symmetry_holds, "symmetry failed on ({i},{j})");
            }
        }
    }
}
