//! Polynomial maps from R^8 into an algebra: one exact polynomial per basis
//! component, tagged with the target algebra.

use std::fmt;

use crate::clifford::{Blade, Multivector, BLADES};
use crate::octonion::{Octonion, Quaternion, OCT_TABLE};
use crate::poly::{write_poly_terms, Poly, NVARS};
use crate::scalar::Scalar;

/// Target algebra of a [`PolyMap`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algebra {
    Real,
    Quaternion,
    Octonion,
    Clifford,
}

impl Algebra {
    pub fn n_components(self) -> usize {
        match self {
            Algebra::Real => 1,
            Algebra::Quaternion => 4,
            Algebra::Octonion => 8,
            Algebra::Clifford => BLADES,
        }
    }

    /// Basis symbol for a component index; empty for the scalar component.
    pub fn component_label(self, i: usize) -> String {
        match self {
            Algebra::Real => String::new(),
            Algebra::Quaternion | Algebra::Octonion => {
                if i == 0 {
                    String::new()
                } else {
                    format!("e{i}")
                }
            }
            Algebra::Clifford => {
                if i == 0 {
                    String::new()
                } else {
                    Blade(i as u8).to_string()
                }
            }
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Algebra::Real => "real",
            Algebra::Quaternion => "quaternion",
            Algebra::Octonion => "octonion",
            Algebra::Clifford => "clifford",
        }
    }
}

/// Function R^8 -> A stored componentwise with exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMap<S> {
    algebra: Algebra,
    comp: Vec<Poly<S>>,
}

impl<S: Scalar> PolyMap<S> {
    pub fn zero(algebra: Algebra) -> Self {
        Self { algebra, comp: vec![Poly::zero(); algebra.n_components()] }
    }

    pub fn from_components(algebra: Algebra, comp: Vec<Poly<S>>) -> Self {
        assert_eq!(comp.len(), algebra.n_components(), "component count mismatch");
        Self { algebra, comp }
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn component(&self, i: usize) -> &Poly<S> {
        &self.comp[i]
    }

    pub fn components(&self) -> &[Poly<S>] {
        &self.comp
    }

    pub fn set_component(&mut self, i: usize, p: Poly<S>) {
        self.comp[i] = p;
    }

    pub fn add_to_component(&mut self, i: usize, p: &Poly<S>) {
        self.comp[i] = self.comp[i].add(p);
    }

    pub fn is_zero(&self) -> bool {
        self.comp.iter().all(Poly::is_zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.comp.iter().filter_map(Poly::degree).max()
    }

    pub fn depends_on(&self, i: usize) -> bool {
        self.comp.iter().any(|p| p.depends_on(i))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.algebra, rhs.algebra, "algebra mismatch");
        Self {
            algebra: self.algebra,
            comp: self.comp.iter().zip(&rhs.comp).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.algebra, rhs.algebra, "algebra mismatch");
        Self {
            algebra: self.algebra,
            comp: self.comp.iter().zip(&rhs.comp).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self { algebra: self.algebra, comp: self.comp.iter().map(Poly::neg).collect() }
    }

    pub fn scale(&self, s: &S) -> Self {
        Self { algebra: self.algebra, comp: self.comp.iter().map(|p| p.scale(s)).collect() }
    }

    /// Multiplies every component by a scalar polynomial.
    pub fn scale_poly(&self, p: &Poly<S>) -> Self {
        Self { algebra: self.algebra, comp: self.comp.iter().map(|q| q.mul(p)).collect() }
    }

    /// Componentwise formal partial derivative.
    pub fn partial(&self, i: usize) -> Self {
        Self { algebra: self.algebra, comp: self.comp.iter().map(|p| p.partial(i)).collect() }
    }

    /// Pointwise product in the target algebra: `(f.g)(x) = f(x) o g(x)`
    /// with the octonion/quaternion table or the geometric product according
    /// to the tag. Panics on tag mismatch.
    pub fn pointwise_mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.algebra, rhs.algebra, "algebra mismatch");
        let mut out = Self::zero(self.algebra);
        match self.algebra {
            Algebra::Real => {
                out.comp[0] = self.comp[0].mul(&rhs.comp[0]);
            }
            Algebra::Quaternion | Algebra::Octonion => {
                let n = self.algebra.n_components();
                for i in 0..n {
                    if self.comp[i].is_zero() {
                        continue;
                    }
                    for j in 0..n {
                        if rhs.comp[j].is_zero() {
                            continue;
                        }
                        let (sign, k) = OCT_TABLE[i][j];
                        let term = self.comp[i].mul(&rhs.comp[j]);
                        if sign > 0 {
                            out.comp[k] = out.comp[k].add(&term);
                        } else {
                            out.comp[k] = out.comp[k].sub(&term);
                        }
                    }
                }
            }
            Algebra::Clifford => {
                for i in 0..BLADES {
                    if self.comp[i].is_zero() {
                        continue;
                    }
                    for j in 0..BLADES {
                        if rhs.comp[j].is_zero() {
                            continue;
                        }
                        let (sign, m) = Blade(i as u8).mul(Blade(j as u8));
                        let term = self.comp[i].mul(&rhs.comp[j]);
                        let k = m.0 as usize;
                        if sign > 0 {
                            out.comp[k] = out.comp[k].add(&term);
                        } else {
                            out.comp[k] = out.comp[k].sub(&term);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn eval_components(&self, x: &[S; NVARS]) -> Vec<S> {
        self.comp.iter().map(|p| p.eval(x)).collect()
    }

    pub fn eval_oct(&self, x: &[S; NVARS]) -> Octonion<S> {
        assert_eq!(self.algebra, Algebra::Octonion, "octonion tag required");
        Octonion::from_components(std::array::from_fn(|i| self.comp[i].eval(x)))
    }

    pub fn eval_quat(&self, x: &[S; NVARS]) -> Quaternion<S> {
        assert_eq!(self.algebra, Algebra::Quaternion, "quaternion tag required");
        Quaternion::from_components(std::array::from_fn(|i| self.comp[i].eval(x)))
    }

    pub fn eval_clifford(&self, x: &[S; NVARS]) -> Multivector<S> {
        assert_eq!(self.algebra, Algebra::Clifford, "clifford tag required");
        let mut m = Multivector::zero();
        for i in 0..BLADES {
            m.set_coeff(Blade(i as u8), self.comp[i].eval(x));
        }
        m
    }

    /// Constant map with the given octonion value.
    pub fn constant_oct(x: &Octonion<S>) -> Self {
        let mut f = Self::zero(Algebra::Octonion);
        for i in 0..8 {
            f.comp[i] = Poly::constant(x.component(i).clone());
        }
        f
    }

    /// Octonion-tagged copy of a real- or quaternion-tagged map (components
    /// above the source algebra's are zero).
    pub fn to_octonion_map(&self) -> Self {
        match self.algebra {
            Algebra::Octonion => self.clone(),
            Algebra::Real | Algebra::Quaternion => {
                let mut f = Self::zero(Algebra::Octonion);
                for (i, p) in self.comp.iter().enumerate() {
                    f.comp[i] = p.clone();
                }
                f
            }
            Algebra::Clifford => panic!("clifford maps do not embed into octonions"),
        }
    }

    /// Clifford-tagged paravector copy: component `i` goes to the grade-1
    /// blade `e_i`, the scalar component to the scalar blade.
    pub fn to_clifford_map(&self) -> Self {
        match self.algebra {
            Algebra::Clifford => self.clone(),
            _ => {
                let mut f = Self::zero(Algebra::Clifford);
                for (i, p) in self.comp.iter().enumerate() {
                    let idx = if i == 0 { 0 } else { Blade::generator(i).0 as usize };
                    f.comp[idx] = p.clone();
                }
                f
            }
        }
    }

    /// For clifford-tagged maps: true when only grade-0/1 components appear.
    pub fn is_paravector_map(&self) -> bool {
        match self.algebra {
            Algebra::Clifford => self
                .comp
                .iter()
                .enumerate()
                .all(|(i, p)| p.is_zero() || Blade(i as u8).grade() <= 1),
            _ => true,
        }
    }

    /// Scalar component.
    pub fn scalar_part(&self) -> Poly<S> {
        self.comp[0].clone()
    }

    /// Copy with the scalar component zeroed.
    pub fn vector_part(&self) -> Self {
        let mut f = self.clone();
        f.comp[0] = Poly::zero();
        f
    }

    /// Deterministic textual form in the expression grammar; parses back to
    /// an equal map.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl<S: Scalar> fmt::Display for PolyMap<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, p) in self.comp.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            write_poly_terms(f, p, &self.algebra.component_label(i), !wrote)?;
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;
    use crate::{Oct, Rat, RatMap, RatPoly};

    fn x(i: usize) -> RatPoly {
        RatPoly::var(i)
    }

    fn counterexample_map() -> RatMap {
        // x2 e1 - x7 e4
        let mut f = RatMap::zero(Algebra::Octonion);
        f.set_component(1, x(2));
        f.set_component(4, x(7).neg());
        f
    }

    #[test]
    fn eval_examples() {
        let f = counterexample_map();
        let mut pt: [Rat; NVARS] = std::array::from_fn(|_| int(0));
        pt[2] = int(3);
        pt[7] = int(2);
        let expected = &Oct::basis(1).scale(&int(3)) - &Oct::basis(4).scale(&int(2));
        assert_eq!(f.eval_oct(&pt), expected);

        // 7 x0 + x1 e1 + ... + x7 e7 at x = e0 evaluates to 7.
        let mut g = RatMap::zero(Algebra::Octonion);
        g.set_component(0, x(0).scale(&int(7)));
        for i in 1..8 {
            g.set_component(i, x(i));
        }
        let mut e0: [Rat; NVARS] = std::array::from_fn(|_| int(0));
        e0[0] = int(1);
        assert_eq!(g.eval_oct(&e0), Oct::scalar(int(7)));

        assert_eq!(RatMap::zero(Algebra::Octonion).eval_oct(&pt), Oct::zero());
    }

    #[test]
    fn partial_examples() {
        let f = counterexample_map();
        let d2 = f.partial(2);
        assert_eq!(*d2.component(1), RatPoly::one());
        assert!(d2.component(4).is_zero());
        assert!(f.partial(0).is_zero());
        let mut h = RatMap::zero(Algebra::Octonion);
        h.set_component(3, x(1).mul(&x(1)));
        let d1 = h.partial(1);
        assert_eq!(*d1.component(3), x(1).scale(&int(2)));
    }

    #[test]
    fn pointwise_mul_examples() {
        // Real tag: x1 * x1 = x1^2.
        let mut f = RatMap::zero(Algebra::Real);
        f.set_component(0, x(1));
        assert_eq!(*f.pointwise_mul(&f).component(0), x(1).mul(&x(1)));

        // Octonion constants: e1 o e2 = e3.
        let e1 = RatMap::constant_oct(&Oct::basis(1));
        let e2 = RatMap::constant_oct(&Oct::basis(2));
        assert_eq!(e1.pointwise_mul(&e2), RatMap::constant_oct(&Oct::basis(3)));

        // (x1 e1)^2 = -x1^2.
        let mut g = RatMap::zero(Algebra::Octonion);
        g.set_component(1, x(1));
        let sq = g.pointwise_mul(&g);
        assert_eq!(*sq.component(0), x(1).mul(&x(1)).neg());
        assert!((1..8).all(|i| sq.component(i).is_zero()));
    }

    #[test]
    fn pointwise_mul_matches_eval() {
        let f = counterexample_map();
        let mut g = RatMap::zero(Algebra::Octonion);
        g.set_component(0, x(1));
        g.set_component(3, x(2).neg());
        let fg = f.pointwise_mul(&g);
        let pt: [Rat; NVARS] = std::array::from_fn(|i| int(i as i64 - 4));
        assert_eq!(fg.eval_oct(&pt), f.eval_oct(&pt).mul(&g.eval_oct(&pt)));
    }

    #[test]
    fn render_examples() {
        let f = counterexample_map();
        assert_eq!(f.render(), "x2*e1 - x7*e4");
        assert_eq!(RatMap::zero(Algebra::Octonion).render(), "0");
        let mut g = RatMap::zero(Algebra::Octonion);
        g.set_component(0, x(1));
        g.set_component(3, x(2).neg());
        assert_eq!(g.render(), "x1 - x2*e3");
    }

    #[test]
    fn clifford_paravector_embedding() {
        let f = counterexample_map().to_clifford_map();
        assert_eq!(f.algebra(), Algebra::Clifford);
        assert!(f.is_paravector_map());
        assert_eq!(*f.component(Blade::generator(1).0 as usize), x(2));
        assert_eq!(*f.component(Blade::generator(4).0 as usize), x(7).neg());
    }

    #[test]
    #[should_panic(expected = "algebra mismatch")]
    fn pointwise_mul_rejects_tag_mismatch() {
        let f = RatMap::zero(Algebra::Real);
        let g = RatMap::zero(Algebra::Octonion);
        let _ = f.pointwise_mul(&g);
    }
}
