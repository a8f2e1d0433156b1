//! Exact dimensions of homogeneous polynomial solution spaces for each
//! regularity system.
//!
//! A degree-k homogeneous map solves a first-order system iff its
//! coefficient vector lies in the nullspace of the system's constraint
//! matrix, whose rows are indexed by (equation, degree k-1 monomial) pairs
//! and whose columns by (component, degree-k monomial) pairs. All entries
//! are small integers by construction (structure constants times derivative
//! multiplicities; the spinor rows are pre-scaled by 16), so ranks are
//! computed by integer-preserving fraction-free elimination with no
//! rounding anywhere.
//!
//! The componentwise equation tables below are transcriptions of the
//! first-order systems characterising each class; the operator route in
//! [`crate::ops`] computes the same conditions through algebra products, and
//! `classify` asserts at runtime that the two routes agree.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::ops;
use crate::poly::{Monomial, Poly, NVARS};
use crate::polymap::{Algebra, PolyMap};
use crate::scalar::Scalar;
use crate::{Rat, RatMap};

/// Identifier of a linear regularity system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SystemId {
    /// Moisil-Teodorescu type system (octonion left regularity).
    Left,
    /// Mirror system (octonion right regularity).
    Right,
    /// Simultaneous left and right regularity.
    B,
    /// Riesz system in eight variables.
    R,
    /// `(d_x f) I- = 0` over all 128 blade coefficients.
    SpinorKernel,
    /// `d_x f = 0` for paravector maps, over all 128 blade coefficients.
    CliffordRiesz,
    /// Quaternionic left regularity (four variables).
    QuatLeft,
    /// Quaternionic left and right regularity.
    QuatB,
    /// Riesz system in four variables.
    QuatR,
}

/// Signed term `sign * d_{x_i} f_j` of a componentwise equation.
pub type EqTerm = (i8, usize, usize);

/// Componentwise Moisil-Teodorescu system: one equation per octonion
/// component of `D_x f`.
const MT_LEFT: [[EqTerm; 8]; 8] = [
    [(1, 0, 0), (-1, 1, 1), (-1, 2, 2), (-1, 3, 3), (-1, 4, 4), (-1, 5, 5), (-1, 6, 6), (-1, 7, 7)],
    [(1, 0, 1), (1, 1, 0), (1, 2, 3), (-1, 3, 2), (1, 4, 5), (-1, 5, 4), (-1, 6, 7), (1, 7, 6)],
    [(1, 0, 2), (1, 2, 0), (-1, 1, 3), (1, 3, 1), (1, 4, 6), (-1, 6, 4), (1, 5, 7), (-1, 7, 5)],
    [(1, 0, 3), (1, 3, 0), (1, 1, 2), (-1, 2, 1), (1, 4, 7), (-1, 7, 4), (-1, 5, 6), (1, 6, 5)],
    [(1, 0, 4), (1, 4, 0), (-1, 1, 5), (1, 5, 1), (-1, 2, 6), (1, 6, 2), (-1, 3, 7), (1, 7, 3)],
    [(1, 0, 5), (1, 5, 0), (1, 1, 4), (-1, 4, 1), (-1, 2, 7), (1, 7, 2), (1, 3, 6), (-1, 6, 3)],
    [(1, 0, 6), (1, 6, 0), (1, 1, 7), (-1, 7, 1), (1, 2, 4), (-1, 4, 2), (-1, 3, 5), (1, 5, 3)],
    [(1, 0, 7), (1, 7, 0), (-1, 1, 6), (1, 6, 1), (1, 2, 5), (-1, 5, 2), (1, 3, 4), (-1, 4, 3)],
];

/// Componentwise quaternionic Cauchy-Riemann system.
const QUAT_LEFT_SYS: [[EqTerm; 4]; 4] = [
    [(1, 0, 0), (-1, 1, 1), (-1, 2, 2), (-1, 3, 3)],
    [(1, 0, 1), (1, 1, 0), (1, 2, 3), (-1, 3, 2)],
    [(1, 0, 2), (1, 2, 0), (-1, 1, 3), (1, 3, 1)],
    [(1, 0, 3), (1, 3, 0), (1, 1, 2), (-1, 2, 1)],
];

impl SystemId {
    pub fn label(self) -> &'static str {
        match self {
            SystemId::Left => "LEFT",
            SystemId::Right => "RIGHT",
            SystemId::B => "B",
            SystemId::R => "R",
            SystemId::SpinorKernel => "SPINOR_KERNEL",
            SystemId::CliffordRiesz => "CLIFFORD_RIESZ",
            SystemId::QuatLeft => "QUAT_LEFT",
            SystemId::QuatB => "QUAT_B",
            SystemId::QuatR => "QUAT_R",
        }
    }

    /// Number of unknown components of a candidate map.
    pub fn n_components(self) -> usize {
        match self {
            SystemId::QuatLeft | SystemId::QuatB | SystemId::QuatR => 4,
            _ => 8,
        }
    }

    /// Number of coordinates the solutions depend on.
    pub fn n_vars(self) -> usize {
        match self {
            SystemId::QuatLeft | SystemId::QuatB | SystemId::QuatR => 4,
            _ => 8,
        }
    }

    fn map_algebra(self) -> Algebra {
        if self.n_components() == 4 {
            Algebra::Quaternion
        } else {
            Algebra::Octonion
        }
    }
}

fn mixed_rows(hi: usize) -> Vec<Vec<EqTerm>> {
    (1..hi).map(|i| vec![(1, 0, i), (1, i, 0)]).collect()
}

fn curl_combo_rows(base: &[[EqTerm; 8]]) -> Vec<Vec<EqTerm>> {
    base.iter()
        .skip(1)
        .map(|eq| eq.iter().copied().filter(|&(_, i, j)| i >= 1 && j >= 1).collect())
        .collect()
}

fn single_curl_rows(hi: usize) -> Vec<Vec<EqTerm>> {
    let mut rows = Vec::new();
    for i in 1..hi {
        for j in (i + 1)..hi {
            rows.push(vec![(1, i, j), (-1, j, i)]);
        }
    }
    rows
}

/// The componentwise equations of a table-driven system; `None` for the two
/// systems generated by symbolic Clifford expansion.
pub fn equations(s: SystemId) -> Option<Vec<Vec<EqTerm>>> {
    match s {
        SystemId::Left => Some(MT_LEFT.iter().map(|e| e.to_vec()).collect()),
        SystemId::Right => Some(
            MT_LEFT
                .iter()
                .map(|eq| {
                    eq.iter()
                        .map(|&(s, i, j)| if i >= 1 && j >= 1 { (-s, i, j) } else { (s, i, j) })
                        .collect()
                })
                .collect(),
        ),
        SystemId::B => {
            let mut rows = vec![MT_LEFT[0].to_vec()];
            rows.extend(mixed_rows(8));
            rows.extend(curl_combo_rows(&MT_LEFT));
            Some(rows)
        }
        SystemId::R => {
            let mut rows = vec![MT_LEFT[0].to_vec()];
            rows.extend(mixed_rows(8));
            rows.extend(single_curl_rows(8));
            Some(rows)
        }
        SystemId::QuatLeft => Some(QUAT_LEFT_SYS.iter().map(|e| e.to_vec()).collect()),
        SystemId::QuatB => {
            let mut rows = vec![QUAT_LEFT_SYS[0].to_vec()];
            rows.extend(mixed_rows(4));
            rows.extend(
                QUAT_LEFT_SYS
                    .iter()
                    .skip(1)
                    .map(|eq| {
                        eq.iter().copied().filter(|&(_, i, j)| i >= 1 && j >= 1).collect::<Vec<_>>()
                    }),
            );
            Some(rows)
        }
        SystemId::QuatR => {
            let mut rows = vec![QUAT_LEFT_SYS[0].to_vec()];
            rows.extend(mixed_rows(4));
            rows.extend(single_curl_rows(4));
            Some(rows)
        }
        SystemId::SpinorKernel | SystemId::CliffordRiesz => None,
    }
}

/// Residual polynomials of a system applied to a map. A map solves the
/// system iff every residual is the zero polynomial. Table systems expect
/// the tag matching [`SystemId::map_algebra`]; the Clifford-generated
/// systems take the octonion-tagged component form of the paravector map.
pub fn system_residuals<S: Scalar>(s: SystemId, f: &PolyMap<S>) -> Vec<Poly<S>> {
    match s {
        SystemId::SpinorKernel => {
            ops::spinor_residual_oct(f).components().to_vec()
        }
        SystemId::CliffordRiesz => {
            ops::cl_d_left(&f.to_clifford_map()).components().to_vec()
        }
        _ => {
            assert_eq!(f.algebra(), s.map_algebra(), "map tag does not fit system");
            equations(s)
                .expect("table system")
                .iter()
                .map(|eq| {
                    let mut acc = Poly::zero();
                    for &(sign, i, j) in eq {
                        let d = f.component(j).partial(i);
                        acc = if sign > 0 { acc.add(&d) } else { acc.sub(&d) };
                    }
                    acc
                })
                .collect()
        }
    }
}

/// Homogeneous monomials of total degree `k` in the first `n_vars`
/// coordinates, in graded-lex order. Size `C(k + n_vars - 1, n_vars - 1)`.
pub fn monomial_basis(k: u32, n_vars: usize) -> Vec<Monomial> {
    assert!(n_vars == 4 || n_vars == 8, "systems use 4 or 8 variables");
    let mut out = Vec::new();
    let mut exps = [0u32; NVARS];
    fn rec(out: &mut Vec<Monomial>, exps: &mut [u32; NVARS], var: usize, n_vars: usize, rem: u32) {
        if var == n_vars - 1 {
            exps[var] = rem;
            out.push(Monomial(*exps));
            exps[var] = 0;
            return;
        }
        for e in 0..=rem {
            exps[var] = e;
            rec(out, exps, var + 1, n_vars, rem - e);
            exps[var] = 0;
        }
    }
    rec(&mut out, &mut exps, 0, n_vars, k);
    out.sort();
    out
}

/// Exact integer constraint matrix for degree-`k` homogeneous solutions.
#[derive(Clone, Debug)]
pub struct ConstraintMatrix {
    pub system: SystemId,
    pub degree: u32,
    /// Degree-k monomial basis indexing the columns of each component block.
    pub monomials: Vec<Monomial>,
    pub n_cols: usize,
    pub rows: Vec<Vec<i64>>,
}

impl ConstraintMatrix {
    pub fn unknowns(&self) -> usize {
        self.n_cols
    }

    /// Exact rank by fraction-free (Bareiss) elimination. Falls back from
    /// machine integers to big integers if an intermediate minor overflows.
    pub fn rank(&self) -> usize {
        bareiss_rank_i128(&self.rows, self.n_cols)
            .unwrap_or_else(|| bareiss_rank_bigint(&self.rows, self.n_cols))
    }

    /// Rational basis of the nullspace, one vector per free column, from a
    /// fraction-free Gauss-Jordan reduction.
    pub fn nullspace(&self) -> Vec<Vec<Rat>> {
        let (reduced, pivots) = jordan_reduce(&self.rows, self.n_cols);
        let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
        let mut basis = Vec::new();
        for cf in 0..self.n_cols {
            if pivot_cols.contains(&cf) {
                continue;
            }
            let mut v = vec![Rat::zero(); self.n_cols];
            v[cf] = Rat::one();
            for &(r, c) in &pivots {
                // d * x_c + sum_free a_f x_f = 0  =>  x_c = -a_cf / d.
                let d = &reduced[r][c];
                let a = &reduced[r][cf];
                if !a.is_zero() {
                    v[c] = -Rat::from(a.clone()) / Rat::from(d.clone());
                }
            }
            basis.push(v);
        }
        basis
    }

    /// True when the matrix annihilates the vector.
    pub fn in_nullspace(&self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.n_cols);
        self.rows.iter().all(|row| {
            let mut acc = Rat::zero();
            for (a, x) in row.iter().zip(v) {
                if *a != 0 {
                    acc += Rat::from(BigInt::from(*a)) * x;
                }
            }
            acc.is_zero()
        })
    }
}

use num_traits::One;

fn bareiss_rank_i128(rows: &[Vec<i64>], n_cols: usize) -> Option<usize> {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .filter(|r| r.iter().any(|&x| x != 0))
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut prev: i128 = 1;
    let mut rank = 0;
    for c in 0..n_cols {
        if rank == m.len() {
            break;
        }
        let Some(p) = (rank..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(rank, p);
        for i in (rank + 1)..m.len() {
            for j in (c + 1)..n_cols {
                let t = m[rank][c].checked_mul(m[i][j])?.checked_sub(m[i][c].checked_mul(m[rank][j])?)?;
                debug_assert_eq!(t % prev, 0, "fraction-free division must be exact");
                m[i][j] = t / prev;
            }
            m[i][c] = 0;
        }
        prev = m[rank][c];
        rank += 1;
    }
    Some(rank)
}

fn bareiss_rank_bigint(rows: &[Vec<i64>], n_cols: usize) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .filter(|r| r.iter().any(|&x| x != 0))
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..n_cols {
        if rank == m.len() {
            break;
        }
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(rank, p);
        for i in (rank + 1)..m.len() {
            for j in (c + 1)..n_cols {
                let t = &m[rank][c] * &m[i][j] - &m[i][c] * &m[rank][j];
                m[i][j] = t / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
    }
    rank
}

/// Fraction-free Gauss-Jordan (Montante) reduction over big integers;
/// returns the reduced rows and the (row, column) pivot positions. After
/// reduction each pivot row has zeros in all other pivot columns, so
/// nullspace vectors read off directly.
fn jordan_reduce(rows: &[Vec<i64>], n_cols: usize) -> (Vec<Vec<BigInt>>, Vec<(usize, usize)>) {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .filter(|r| r.iter().any(|&x| x != 0))
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut prev = BigInt::one();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    for c in 0..n_cols {
        let rank = pivots.len();
        if rank == m.len() {
            break;
        }
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(rank, p);
        let piv = m[rank][c].clone();
        for i in 0..m.len() {
            if i == rank {
                continue;
            }
            for j in 0..n_cols {
                if j == c {
                    continue;
                }
                let t = &piv * &m[i][j] - &m[i][c] * &m[rank][j];
                m[i][j] = t / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = piv;
        pivots.push((rank, c));
    }
    (m, pivots)
}

fn rat_coeff_to_i64(c: &Rat) -> i64 {
    assert!(c.denom().is_one(), "constraint entries must be integral");
    c.numer().to_i64().expect("constraint entry fits machine integer")
}

/// Builds the constraint matrix of a system at homogeneous degree `k`.
pub fn build_matrix(s: SystemId, k: u32) -> ConstraintMatrix {
    match equations(s) {
        Some(eqs) => build_table_matrix(s, k, &eqs),
        None => build_symbolic_matrix(s, k, None),
    }
}

/// Spinor-kernel constraints restricted to blade coefficients of the given
/// grades (the full set uses all grades 0..=7).
pub fn build_spinor_matrix_graded(k: u32, grades: &[u32]) -> ConstraintMatrix {
    build_symbolic_matrix(SystemId::SpinorKernel, k, Some(grades))
}

fn build_table_matrix(s: SystemId, k: u32, eqs: &[Vec<EqTerm>]) -> ConstraintMatrix {
    let n_vars = s.n_vars();
    let ncomp = s.n_components();
    let monos = monomial_basis(k, n_vars);
    let n_cols = ncomp * monos.len();
    let col_of = |comp: usize, t: usize| comp * monos.len() + t;
    let mono_index: std::collections::HashMap<Monomial, usize> =
        monos.iter().enumerate().map(|(t, m)| (*m, t)).collect();

    let mut rows = Vec::new();
    if k == 0 {
        // First-order systems impose nothing on constants.
        return ConstraintMatrix { system: s, degree: k, monomials: monos, n_cols, rows };
    }
    let lower = monomial_basis(k - 1, n_vars);
    for eq in eqs {
        for mm in &lower {
            let mut row = vec![0i64; n_cols];
            for &(sign, i, j) in eq {
                let mut m = *mm;
                m.0[i] += 1;
                let t = mono_index[&m];
                row[col_of(j, t)] += sign as i64 * m.0[i] as i64;
            }
            rows.push(row);
        }
    }
    ConstraintMatrix { system: s, degree: k, monomials: monos, n_cols, rows }
}

fn build_symbolic_matrix(s: SystemId, k: u32, grades: Option<&[u32]>) -> ConstraintMatrix {
    use crate::clifford::{Blade, BLADES};
    let monos = monomial_basis(k, 8);
    let n_cols = 8 * monos.len();
    let lower = if k == 0 { Vec::new() } else { monomial_basis(k - 1, 8) };
    let lower_index: std::collections::HashMap<Monomial, usize> =
        lower.iter().enumerate().map(|(t, m)| (*m, t)).collect();
    let kept_blades: Vec<usize> = (0..BLADES)
        .filter(|&b| grades.map_or(true, |g| g.contains(&Blade(b as u8).grade())))
        .collect();
    let blade_row: std::collections::HashMap<usize, usize> =
        kept_blades.iter().enumerate().map(|(r, &b)| (b, r)).collect();

    let mut rows = vec![vec![0i64; n_cols]; kept_blades.len() * lower.len()];
    for comp in 0..8 {
        for (t, m) in monos.iter().enumerate() {
            let mut unit = RatMap::zero(Algebra::Octonion);
            let mut p = Poly::zero();
            p.add_term(*m, Rat::one());
            unit.set_component(comp, p);
            let residuals = system_residuals(s, &unit);
            let col = comp * monos.len() + t;
            for (blade, poly) in residuals.iter().enumerate() {
                let Some(&br) = blade_row.get(&blade) else { continue };
                for (mm, c) in poly.terms() {
                    let row = br * lower.len() + lower_index[mm];
                    rows[row][col] += rat_coeff_to_i64(c);
                }
            }
        }
    }
    ConstraintMatrix { system: s, degree: k, monomials: monos, n_cols, rows }
}

/// Reassembles a coefficient vector into the system's map form.
pub fn vector_to_map(s: SystemId, k: u32, v: &[Rat]) -> RatMap {
    let monos = monomial_basis(k, s.n_vars());
    let ncomp = s.n_components();
    assert_eq!(v.len(), ncomp * monos.len());
    let mut f = RatMap::zero(s.map_algebra());
    for comp in 0..ncomp {
        let mut p = Poly::zero();
        for (t, m) in monos.iter().enumerate() {
            p.add_term(*m, v[comp * monos.len() + t].clone());
        }
        f.set_component(comp, p);
    }
    f
}

/// Coefficient vector of a homogeneous degree-`k` map (inverse of
/// [`vector_to_map`]).
pub fn map_to_vector(s: SystemId, k: u32, f: &RatMap) -> Vec<Rat> {
    let monos = monomial_basis(k, s.n_vars());
    let ncomp = s.n_components();
    let mut v = vec![Rat::zero(); ncomp * monos.len()];
    for comp in 0..ncomp {
        for (t, m) in monos.iter().enumerate() {
            v[comp * monos.len() + t] = f.component(comp).coeff(m);
        }
    }
    v
}

/// One row of a dimension table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimEntry {
    pub system: SystemId,
    pub degree: u32,
    pub unknowns: usize,
    pub rank: usize,
    pub dimension: usize,
}

/// Dimension of the space of degree-`k` homogeneous solutions.
pub fn solution_dim(s: SystemId, k: u32) -> DimEntry {
    let m = build_matrix(s, k);
    let rank = m.rank();
    DimEntry { system: s, degree: k, unknowns: m.n_cols, rank, dimension: m.n_cols - rank }
}

/// A map solving `in_system` but not `not_in_system`.
#[derive(Clone, Debug)]
pub struct Witness {
    pub in_system: SystemId,
    pub not_in_system: SystemId,
    pub map: RatMap,
}

/// Dimensions of the class chain at one degree, with explicit witnesses for
/// the strict inclusions (octonion mode) or the row-space equality check of
/// the two middle systems (quaternion mode).
#[derive(Clone, Debug)]
pub struct InclusionReport {
    pub quaternion_mode: bool,
    pub degree: u32,
    pub entries: Vec<DimEntry>,
    pub witnesses: Vec<Witness>,
    /// Quaternion mode: B and R generate the same row space.
    pub quat_br_rowspace_equal: Option<bool>,
}

/// Rank of the two matrices stacked on top of each other.
fn stacked_rank(a: &ConstraintMatrix, b: &ConstraintMatrix) -> usize {
    assert_eq!(a.n_cols, b.n_cols);
    let mut rows = a.rows.clone();
    rows.extend(b.rows.iter().cloned());
    let stacked = ConstraintMatrix {
        system: a.system,
        degree: a.degree,
        monomials: a.monomials.clone(),
        n_cols: a.n_cols,
        rows,
    };
    stacked.rank()
}

fn find_witness(
    inner: &ConstraintMatrix,
    outer: &ConstraintMatrix,
    k: u32,
) -> Option<Witness> {
    // A nullspace basis vector of the outer (weaker) system that the inner
    // (stronger) system does not annihilate.
    outer
        .nullspace()
        .into_iter()
        .find(|v| !inner.in_nullspace(v))
        .map(|v| Witness {
            in_system: outer.system,
            not_in_system: inner.system,
            map: vector_to_map(outer.system, k, &v),
        })
}

pub fn inclusion_report(k: u32, quaternion_mode: bool) -> InclusionReport {
    assert!(k >= 1, "inclusion chains start at degree 1");
    let systems: [SystemId; 3] = if quaternion_mode {
        [SystemId::QuatLeft, SystemId::QuatB, SystemId::QuatR]
    } else {
        [SystemId::Left, SystemId::B, SystemId::R]
    };
    let matrices: Vec<ConstraintMatrix> = systems.iter().map(|&s| build_matrix(s, k)).collect();
    let entries: Vec<DimEntry> = matrices
        .iter()
        .map(|m| {
            let rank = m.rank();
            DimEntry {
                system: m.system,
                degree: k,
                unknowns: m.n_cols,
                rank,
                dimension: m.n_cols - rank,
            }
        })
        .collect();

    let mut witnesses = Vec::new();
    let mut quat_br_rowspace_equal = None;
    if quaternion_mode {
        let rb = entries[1].rank;
        let rr = entries[2].rank;
        quat_br_rowspace_equal = Some(rb == rr && stacked_rank(&matrices[1], &matrices[2]) == rb);
    } else {
        if let Some(w) = find_witness(&matrices[1], &matrices[0], k) {
            witnesses.push(w); // left-regular but not B-regular
        }
        if let Some(w) = find_witness(&matrices[2], &matrices[1], k) {
            witnesses.push(w); // B-regular but not R-regular
        }
    }

    InclusionReport { quaternion_mode, degree: k, entries, witnesses, quat_br_rowspace_equal }
}

/// CSV rendering: `system,degree,unknowns,rank,dimension` per line.
pub fn csv_report(entries: &[DimEntry]) -> String {
    let mut out = String::from("system,degree,unknowns,rank,dimension\n");
    for e in entries {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            e.system.label(),
            e.degree,
            e.unknowns,
            e.rank,
            e.dimension
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;

    #[test]
    fn monomial_basis_sizes() {
        assert_eq!(monomial_basis(0, 8).len(), 1);
        assert_eq!(monomial_basis(1, 8).len(), 8);
        assert_eq!(monomial_basis(2, 8).len(), 36);
        assert_eq!(monomial_basis(3, 8).len(), 120);
        assert_eq!(monomial_basis(2, 4).len(), 10);
        // Deterministic order.
        assert_eq!(monomial_basis(1, 8), monomial_basis(1, 8));
    }

    #[test]
    fn matrix_shapes_at_degree_one() {
        let left = build_matrix(SystemId::Left, 1);
        assert_eq!((left.rows.len(), left.n_cols), (8, 64));
        let b = build_matrix(SystemId::B, 1);
        assert_eq!((b.rows.len(), b.n_cols), (15, 64));
        let r = build_matrix(SystemId::R, 1);
        assert_eq!((r.rows.len(), r.n_cols), (29, 64));
    }

    #[test]
    fn constants_solve_every_system_at_degree_zero() {
        for s in [
            SystemId::Left,
            SystemId::Right,
            SystemId::B,
            SystemId::R,
            SystemId::SpinorKernel,
            SystemId::CliffordRiesz,
        ] {
            let e = solution_dim(s, 0);
            assert_eq!(e.dimension, 8, "{:?}", s);
        }
        for s in [SystemId::QuatLeft, SystemId::QuatB, SystemId::QuatR] {
            assert_eq!(solution_dim(s, 0).dimension, 4, "{:?}", s);
        }
    }

    #[test]
    fn degree_one_dimensions() {
        assert_eq!(solution_dim(SystemId::Left, 1).dimension, 56);
        assert_eq!(solution_dim(SystemId::B, 1).dimension, 49);
        assert_eq!(solution_dim(SystemId::R, 1).dimension, 35);
        assert_eq!(solution_dim(SystemId::QuatLeft, 1).dimension, 12);
        assert_eq!(solution_dim(SystemId::QuatB, 1).dimension, 9);
        assert_eq!(solution_dim(SystemId::QuatR, 1).dimension, 9);
    }

    #[test]
    fn spinor_kernel_contains_counterexample_but_r_does_not() {
        let f = parse::<Rat>("x2*e1 - x7*e4", Algebra::Octonion).unwrap();
        let v = map_to_vector(SystemId::SpinorKernel, 1, &f);
        let spinor = build_matrix(SystemId::SpinorKernel, 1);
        let b = build_matrix(SystemId::B, 1);
        let r = build_matrix(SystemId::R, 1);
        assert!(spinor.in_nullspace(&v));
        assert!(b.in_nullspace(&v));
        assert!(!r.in_nullspace(&v));
        // Spinor kernel is strictly larger than R at degree 1.
        assert!(spinor.n_cols - spinor.rank() > 35);
    }

    #[test]
    fn vector_map_round_trip() {
        let f = parse::<Rat>("x1 - x2*e3 + 5*x7*e6", Algebra::Octonion).unwrap();
        let v = map_to_vector(SystemId::Left, 1, &f);
        assert_eq!(vector_to_map(SystemId::Left, 1, &v), f);
    }

    #[test]
    fn witnesses_at_degree_one() {
        let rep = inclusion_report(1, false);
        let dims: Vec<usize> = rep.entries.iter().map(|e| e.dimension).collect();
        assert_eq!(dims, vec![56, 49, 35]);
        assert_eq!(rep.witnesses.len(), 2);
        for w in &rep.witnesses {
            let c = crate::ops::classify(&w.map).unwrap();
            match (w.in_system, w.not_in_system) {
                (SystemId::Left, SystemId::B) => {
                    assert!(c.left_regular && !c.b_regular);
                }
                (SystemId::B, SystemId::R) => {
                    assert!(c.b_regular && !c.r_regular);
                }
                other => panic!("unexpected witness pair {other:?}"),
            }
        }
        let quat = inclusion_report(1, true);
        assert_eq!(quat.quat_br_rowspace_equal, Some(true));
        assert_eq!(
            quat.entries.iter().map(|e| e.dimension).collect::<Vec<_>>(),
            vec![12, 9, 9]
        );
    }

    #[test]
    fn nullspace_vectors_solve_their_system() {
        for s in [SystemId::B, SystemId::QuatR] {
            let m = build_matrix(s, 1);
            let basis = m.nullspace();
            assert_eq!(basis.len(), m.n_cols - m.rank());
            for v in &basis {
                assert!(m.in_nullspace(v));
            }
        }
    }

    #[test]
    fn rank_is_permutation_invariant() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for s in [SystemId::Left, SystemId::B, SystemId::R, SystemId::QuatB] {
            let m = build_matrix(s, 2);
            let baseline = m.rank();
            let mut shuffled = m.clone();
            shuffled.rows.shuffle(&mut rng);
            assert_eq!(shuffled.rank(), baseline);
            // Column permutation: reverse the column order.
            let mut reversed = m.clone();
            for row in &mut reversed.rows {
                row.reverse();
            }
            assert_eq!(reversed.rank(), baseline);
        }
    }

    #[test]
    fn csv_format() {
        let e = solution_dim(SystemId::Left, 1);
        let csv = csv_report(&[e]);
        assert_eq!(csv, "system,degree,unknowns,rank,dimension\nLEFT,1,64,8,56\n");
    }
}
