//! Seeded, deterministic verification suites.
//!
//! Every structural identity the crate implements is checked here: table
//! algebra, quaternion-form identities, the triality bridge, operator
//! decompositions, classification counterexamples, product rules, and the
//! dimension chains. All comparisons are exact; a failure message pinpoints
//! the identity and the sample that broke it. The CLI `verify` subcommand
//! runs [`run_all`] and exits nonzero when any check records a failure.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::clifford::{wedge, Blade, Constants};
use crate::octonion::{cross_quat_form, e4_identity_pairs, mul_quat_form, OCT_TABLE};
use crate::polymap::Algebra;
use crate::regspace::{self, SystemId};
use crate::scalar::int;
use crate::triality;
use crate::{biaxial, ops, Mv, Oct, Quat, Rat, RatMap};

/// Outcome of one suite run.
#[derive(Clone, Debug, Default)]
pub struct CheckResult {
    pub checks_run: usize,
    pub failures: Vec<String>,
}

impl CheckResult {
    fn ensure(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checks_run += 1;
        if !ok {
            self.failures.push(msg());
        }
    }
}

type Runner = fn(&mut ChaCha8Rng, usize) -> CheckResult;

/// A named identity suite.
pub struct Check {
    pub id: &'static str,
    pub statement: &'static str,
    pub run: Runner,
}

/// Report for one executed suite.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub id: &'static str,
    pub statement: &'static str,
    pub checks_run: usize,
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Full suite report.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub seed: u64,
    pub samples: usize,
    pub checks: Vec<CheckReport>,
}

impl VerifyReport {
    pub fn total_failures(&self) -> usize {
        self.checks.iter().map(|c| c.failures.len()).sum()
    }

    pub fn passed(&self) -> bool {
        self.total_failures() == 0
    }
}

fn fnv(id: &str) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for b in id.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

/// Runs one suite with an RNG derived from the master seed and the check id,
/// so results do not depend on execution order.
pub fn run_check(check: &Check, seed: u64, samples: usize) -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ fnv(check.id));
    let result = (check.run)(&mut rng, samples);
    CheckReport {
        id: check.id,
        statement: check.statement,
        checks_run: result.checks_run,
        failures: result.failures,
    }
}

/// Runs every suite in fixed order.
pub fn run_all(seed: u64, samples: usize) -> VerifyReport {
    let checks = checks();
    let reports = checks.iter().map(|c| run_check(c, seed, samples)).collect();
    VerifyReport { seed, samples, checks: reports }
}

/// Runs the suite with the given id, if it exists.
pub fn run_by_id(id: &str, seed: u64, samples: usize) -> Option<CheckReport> {
    checks().into_iter().find(|c| c.id == id).map(|c| run_check(&c, seed, samples))
}

/// Deterministic sample generators shared by the suites and the test code.
pub mod sample {
    use super::*;

    pub fn rat(rng: &mut ChaCha8Rng) -> Rat {
        Rat::new(BigInt::from(rng.gen_range(-9i64..=9)), BigInt::from(rng.gen_range(1i64..=9)))
    }

    pub fn oct(rng: &mut ChaCha8Rng) -> Oct {
        Oct::from_components(std::array::from_fn(|_| rat(rng)))
    }

    pub fn oct_vector(rng: &mut ChaCha8Rng) -> Oct {
        let mut x = oct(rng);
        x = x.vector_part();
        x
    }

    pub fn quat(rng: &mut ChaCha8Rng) -> Quat {
        Quat::from_components(std::array::from_fn(|_| rat(rng)))
    }

    pub fn mv(rng: &mut ChaCha8Rng, terms: usize) -> Mv {
        let mut m = Mv::zero();
        for _ in 0..terms {
            let mask = Blade(rng.gen_range(0u8..128));
            let c = m.coeff(mask).clone() + rat(rng);
            m.set_coeff(mask, c);
        }
        m
    }

    pub fn poly(
        rng: &mut ChaCha8Rng,
        vars: &[usize],
        max_deg: u32,
        terms: usize,
    ) -> crate::RatPoly {
        let mut p = crate::RatPoly::zero();
        for _ in 0..terms {
            let d = rng.gen_range(0..=max_deg);
            let mut m = crate::poly::Monomial::ONE;
            for _ in 0..d {
                m.0[vars[rng.gen_range(0..vars.len())]] += 1;
            }
            p.add_term(m, rat(rng));
        }
        p
    }

    /// Octonion-valued map in all eight coordinates.
    pub fn omap(rng: &mut ChaCha8Rng, max_deg: u32) -> RatMap {
        let vars: Vec<usize> = (0..8).collect();
        let mut f = RatMap::zero(Algebra::Octonion);
        for i in 0..8 {
            f.set_component(i, poly(rng, &vars, max_deg, 2));
        }
        f
    }

    /// Quaternion-valued map; `all_vars` selects eight or four coordinates.
    pub fn qmap(rng: &mut ChaCha8Rng, max_deg: u32, all_vars: bool) -> RatMap {
        let vars: Vec<usize> = if all_vars { (0..8).collect() } else { (0..4).collect() };
        let mut f = RatMap::zero(Algebra::Quaternion);
        for i in 0..4 {
            f.set_component(i, poly(rng, &vars, max_deg, 2));
        }
        f
    }

    /// Real-valued data on the hyperplane `x0 = 0` (octonion tag, scalar
    /// component only, coordinates x1..x7).
    pub fn real_data(rng: &mut ChaCha8Rng, max_deg: u32) -> RatMap {
        let vars: Vec<usize> = (1..8).collect();
        let mut f = RatMap::zero(Algebra::Octonion);
        f.set_component(0, poly(rng, &vars, max_deg, 3));
        f
    }

    /// Paravector-valued clifford map.
    pub fn paravector_map(rng: &mut ChaCha8Rng, max_deg: u32) -> RatMap {
        omap(rng, max_deg).to_clifford_map()
    }
}

// ---------------------------------------------------------------------------
// Octonion algebra suites.

fn table_products_against(table: &[[(i8, usize); 8]; 8], res: &mut CheckResult) {
    for i in 0..8 {
        for j in 0..8 {
            let prod = Oct::basis(i).mul(&Oct::basis(j));
            let (sign, k) = table[i][j];
            let expected =
                if sign > 0 { Oct::basis(k) } else { -&Oct::basis(k) };
            res.ensure(prod == expected, || {
                format!("basis product e{i} o e{j}: got {prod}, table says {expected}")
            });
        }
    }
}

fn check_oct_table(_rng: &mut ChaCha8Rng, _samples: usize) -> CheckResult {
    let mut res = CheckResult::default();
    table_products_against(&OCT_TABLE, &mut res);
    for i in 0..8 {
        let e = Oct::basis(i);
        res.ensure(Oct::one().mul(&e) == e && e.mul(&Oct::one()) == e, || {
            format!("identity row/column failed at e{i}")
        });
    }
    res
}

fn check_oct_anticommute(_rng: &mut ChaCha8Rng, _samples: usize) -> CheckResult {
    let mut res = CheckResult::default();
    for i in 1..8 {
        res.ensure(Oct::basis(i).mul(&Oct::basis(i)) == -&Oct::one(), || {
            format!("e{i}^2 != -1")
        });
        for j in 1..8 {
            if i == j {
                continue;
            }
            let lhs = Oct::basis(i).mul(&Oct::basis(j));
            let rhs = -&Oct::basis(j).mul(&Oct::basis(i));
            res.ensure(lhs == rhs, || format!("e{i} o e{j} != -(e{j} o e{i})"));
        }
    }
    res
}

fn check_oct_alternative(rng: &mut ChaCha8Rng, samples: usize) -> CheckResult {
    let mut res = CheckResult::default();
    for n in 0..samples {
        let x = sample::oct(rng);
        let y = sample::oct(rng);
        let xx = x.mul(&x);
        res.ensure(x.mul(&x.mul(&y)) == xx.mul(&y), || {
            format!("x(xy) != (xx)y at sample {n}: x={x}, y={y}")
        });
        res.ensure(y.mul(&x).mul(&x) == y.mul(&xx), || {
            format!("(yx)x != y(xx) at sample {n}: x={x}, y={y}")
        });
    }
    res
}

fn check_oct_norm(rng: &mut ChaCha8Rng, samples: usize) -> CheckResult {
    let mut res = CheckResult::default();
    for n in 0..samples {
        let x = sample::oct(rng);
        let y = sample::oct(rng);
        res.ensure(x.mul(&y).norm_sq() == x.norm_sq() * y.norm_sq(), || {
            format!("|xy|^2 != |x|^2 |y|^2 at sample {n}: x={x}, y={y}")
        });
    }
    res
}

fn check_oct_decomp(rng: &mut ChaCha8Rng, samples: usize) -> CheckResult {
    let mut res = CheckResult::default();
    for n in 0..samples {
        let x = sample::oct(rng);
        let y = sample::oct(rng);
        let xv = x.vector_part();
        let yv = y.vector_part();
        let expected = &(&(&Oct::scalar(x.real_part() * y.real_part() - xv.dot(&yv))
            + &yv.scale(&x.real_part()))
            + &xv.scale(&y.real_part()))
            + &xv.cross(&yv);
        res.ensure(x.mul(&y) == expected, || {
            format!("product decomposition failed at sample {n}: x={x}, y={y}")
        });
    }
    res
}

// ---------------------------------------------------------------------------
// Quaternion-form suites.

fn check_quatform_roundtrip(rng: &mut ChaCha8Rng, samples: usize) -> CheckResult {
    let mut res = CheckResult::default();
    for i in 0..8 {
        let x = Oct::basis(i);
        res.ensure(x.to_quat_form().to_octonion() == x, || format!("round trip failed on e{i}"));
    }
    for n in 0..samples {
        let x = sample::oct(rng);
        res.ensure(x.to_quat_form().to_octonion() == x, || {
            format!("round trip failed at sample {n}: x={x}")
        });
    }
    res
}

fn check_quatform_e4(rng: &mut ChaCha8Rng, samples: usize) -> CheckResult {
    let mut res = CheckResult::default();
    let names = [
        "e4 o u = conj(u) o e4",
        "e4 o (u o e4) = -conj(u)",
        "(u o e4) o e4 = -u",
        "u o (v o e4) = (v o u) o e4",
        "(u o e4) o v = (u o conj(v)) o e4",
        "(u o e4) o (v o e4) = -conj(v) o u",
    ];
    for i in 0..4 {
        for j in 0..4 {
            let pairs = e4_identity_pairs(&Quat::basis(i), &Quat::basis(j));
            for (k, (lhs, rhs)) in pairs.iter().enumerate() {
                res.ensure(lhs == rhs, || format!("{} failed on basis (e{i},e{j})", names[k]));
            }
        }
    }
    for n in 0..samples {
        let u = sample::quat(rng);
        let v = sample::quat(rng);
        let pairs = e4_identity_pairs(&u, &v);
        for (k, (lhs, rhs)) in pairs.iter().enumerate() {
            res.ensure(lhs == rhs, || format!("{} failed at sample {n}", names[k]));
        }
    }
    res
}

fn check_quatform_cross_e4(rng: &mut ChaCha8Rng, samples: usize) -> CheckResult {
    let mut res = CheckResult::default();
    let e4 = Oct::basis(4);
    for n in 0..samples {
        // Pure 3-vectors u, b, v, a in span{e1,e2,e3}.
        let mut mk = |_: usize| {
            let mut q = sample::quat(rng);
            q = Quat::from_components([
                int(0),
                q.components()[1].clone(),
                q.components()[2].clone(),
                q.components()[3].clone(),
            ]);
            q
        };
        let (u, b, v, a) = (mk(0), mk(1), mk(2), mk(3));
        let (ue, be, ve, ae) = (u.embed(), b.embed(), v.embed(), a.embed());
        let be4 = be.mul(&e4);
        let ve4 = ve.mul(&e4);
        // 3-dimensional cross/dot through quaternion products.
        let cross = |p: &Quat, q: &Quat| p.mul(q).embed().vector_part();
        let dot = |p: &Quat, q: &Quat| -p.mul(q).embed().real_part();

        let cases: [(&str, Oct, Oct); 7] = [
            ("u x e4 = u o e4", ue.cross(&e4), ue.mul(&e4)),
            ("e4 x a = -(a o e4)", e4.cross(&ae), -&ae.mul(&e4)),
            (
                "u x (b o e4) = -(u x b) o e4 - (u.b) e4",
                ue.cross(&be4),
                &(-&cross(&u, &b).mul(&e4)) - &e4.scale(&dot(&u, &b)),
            ),
            ("e4 x (b o e4) = b", e4.cross(&be4), be.clone()),
            (
                "(v o e4) x a = -(v x a) o e4 + (a.v) e4",
                ve4.cross(&ae),
                &(-&cross(&v, &a).mul(&e4)) + &e4.scale(&dot(&a, &v)),
            ),
            ("(v o e4) x e4 = -v", ve4.cross(&e4), -&ve),
            ("(v o e4) x (b o e4) = -(v x b)", ve4.cross(&be4), -&cross(&v, &b)),
        ];
        for (name, lhs, rhs) in cases {
            res.ensure(lhs == rhs, || format!("{name} failed at sample {n}"));
        }
    }
    res
}

fn check_quatform_cross(rng: &mut ChaCha8Rng, samples: usize) -> CheckResult {
    let mut res = CheckResult::default();
    for i in 1..8 {
        for j in 1..8 {
            let x = Oct::basis(i);
            let y = Oct::basis(j);
            res.ensure(cross_quat_form(&x, &y) == x.cross(&y), || {
                format!("quaternion-form cross failed on (e{i},e{j})")
            });
        }
    }
    for n in 0..samples {
        let x = sample::oct_vector(rng);
        let y = sample::oct_vector(rng);
        res.ensure(cross_quat_form(&x, &y) == x.cross(&y), || {
            format!("quaternion-form cross failed at sample {n}: x={x}, y={y}")
        });
    }
    res
}

fn check_quatform_product(rng: &mut ChaCha8Rng, samples: usize) -> CheckResult {
    let mut res = CheckResult::default();
    for i in 0..8 {
        for j in 0..8 {
            let x = Oct::basis(i);
            let y = Oct::basis(j);
            res.ensure(
                mul_quat_form(&x.to_quat_form(), &y.to_quat_form()) == x.mul(&y),
                || format!("quaternion-form product failed on (e{i},e{j})"),
            );
        }
    }
    for n in 0..samples {
        let x = sample::oct(rng);
        let y = sample::oct(rng);
        res.ensure(
            mul_quat_form(&x.to_quat_form(), &y.to_quat_form()) == x.mul(&y),
            || format!("quaternion-form product failed at sample {n}: x={x}, y={y}"),
        );
    }
    res
}

// ---------------------------------------------------------------------------
// Clifford suites.

fn check_cl_generators(_rng: &mut ChaCha8Rng, _samples: usize) -> CheckResult {
    let mut res = CheckResult::default();
    for i in 1..=7usize {
        for j in 1..=7usize {
            let ei = Mv::basis_blade(Blade::generator(i));
            let ej = Mv::basis_blade(Blade::generator(j));
            let anti = &ei.mul(&ej) + &ej.mul(&ei);
            let expected = if i == j { Mv::scalar(int::<Rat>(-2)) } else { Mv::zero() };
            res.ensure(anti == expected, || {
                format!("e{i} e{j} + e{j} e{i} != -2 delta")
            });
        }
    }
    res
}

fn check_cl_assoc(rng: &mut ChaCha8Rng, samples: usize) -> CheckResult {
    let mut res = CheckResult::default();
    for n in 0..samples {
        let a = sample::mv(rng, 4);
        let b = sample::mv(rng, 4);
        let c = sample::mv(rng, 4);
        res.ensure(a.mul(&b).mul(&c) == a.mul(&b.mul(&c)), || {
            format!("geometric product not associative at sample {n}")
        });
    }
    res
}

fn check_cl_grades(rng: &mut ChaCha8Rng, samples: usize) -> CheckResult {
    let mut res = CheckResult::default();
    for n in 0..samples {
        let a = sample::mv(rng, 6);
        let mut total = Mv::zero();
        for k in 0..=7 {
            let p = a.grade_project(k);
            res.ensure(p.grade_project(k) == p, || {
                format!("grade projection not idempotent at sample {n}, grade {k}")
            });
            total = &total + &p;
        }
        res.ensure(total == a, || format!("grade projections do not sum to identity at sample {n}"));

        // Vectors: x y = x ^ y - x . y.
        let xo = sample::oct_vector(rng);
        let yo = sample::oct_vector(rng);
        let x = Mv::from_octonion(&xo);
        let y = Mv::from_octonion(&yo);
        let lhs = x.mul(&y);
        let rhs = &wedge(&x, &y) - &Mv::scalar(xo.dot(&yo));
        res.ensure(lhs == rhs, || format!("xy != x^y - x.y at sample {n}"));
        res.ensure(wedge(&x, &y) == -&wedge(&y, &x), || {
            format!("wedge not antisymmetric at sample {n}")
        });
    }
    res
}

fn check_cl_constants(_rng: &mut ChaCha8Rng, _samples: usize) -> CheckResult {
    let mut res = CheckResult::default();
    let k = Constants::<Rat>::new();
    res.ensure(k.w.mul(&k.w_inv) == Mv::one(), || "W W^-1 != 1".into());
    res.ensure(k.w_inv.mul(&k.w) == Mv::one(), || "W^-1 W != 1".into());
    res.ensure(k.i_minus.mul(&k.i_minus) == k.i_minus, || "I- not idempotent".into());
    res.ensure(k.i_plus.mul(&k.i_plus) == k.i_plus, || "I+ not idempotent".into());
    res.ensure(k.w.grade_project(3) == k.w, || "W is not a pure 3-vector".into());
    let we = k.w.mul(&k.pseudoscalar);
    res.ensure(we.grade_project(4) == we, || "W e_{1..7} is not a pure 4-vector".into());
    let sixteen = k.i_minus.scale(&int(16));
    let expansion = &(&(&Mv::one() - &k.w) + &we) - &k.pseudoscalar;
    res.ensure(sixteen == expansion, || "16 I- != 1 - W + W e' - e'".into());
    let sum = &k.i_plus + &k.i_minus;
    res.ensure(sum == (&Mv::one() + &we).scale(&crate::scalar::ratio(1, 8)), || {
        "I+ + I- != (1 + W e')/8".into()
    });
    res
}

fn check_cl_paravector(rng: &mut ChaCha8Rng, samples: usize) -> CheckResult {
    let mut res = CheckResult::default();
    for n in 0..samples {
        let xo = sample::oct(rng);
        let yo = sample::oct(rng);
        let x = Mv::from_octonion(&xo);
        let y = Mv::from_octonion(&yo);
        let xv = x.grade_project(1);
        let yv = y.grade_project(1);
        let dot = xo.vector_part().dot(&yo.vector_part());
        let expected = &(&(&Mv::scalar(xo.real_part() * yo.real_part() - dot)
            + &yv.scale(&xo.real_part()))
            + &xv.scale(&yo.real_part()))
            + &wedge(&xv, &yv);
        res.ensure(x.mul(&y) == expected, || {
            format!("paravector product decomposition failed at sample {n}")
        });
    }
    res
}

// ---------------------------------------------------------------------------
// Triality suites.

fn check_triality_product_w(rng: &mut ChaCha8Rng, samples: usize) -> CheckResult {
    let mut res = CheckResult::default();
    for i in 0..8 {
        for j in 0..8 {
            let x = Oct::basis(i);
            let y = Oct::basis(j);
            res.ensure(triality::oct_via_w(&x, &y) == x.mul(&y), || {
                format!("product via W failed on (e{i},e{j})")
            });
        }
    }
    for n in 0..samples {
        let x = sample::oct(rng);
        let y = sample::oct(rng);
        res.ensure(triality::oct_via_w(&x, &y) == x.mul(&y), || {
            format!("product via W failed at sample {n}: x={x}, y={y}")
        });
    }
    res
}

fn check_triality_product_idem(rng: &mut ChaCha8Rng, samples: usize) -> CheckResult {
    let mut res = CheckResult::default();
    for i in 0..8 {
        for j in 0..8 {
            let x = Oct::basis(i);
            let y = Oct::basis(j);
            res.ensure(triality::oct_via_idempotent(&x, &y) == x.mul(&y), || {
                format!("product via idempotent failed on (e{i},e{j})")
            });
        }
    }
    for n in 0..samples {
        let x = sample::oct(rng);
        let y = sample::oct(rng);
        res.ensure(triality::oct_via_idempotent(&x, &y) == x.mul(&y), || {
            format!("product via idempotent failed at sample {n}: x={x}, y={y}")
        });
    }
    res
}

fn check_triality_cross_w(rng: &mut ChaCha8Rng, samples: usize) -> CheckResult {
    let mut res = CheckResult::default();
    for i in 1..8 {
        for j in 1..8 {
            let x = Oct::basis(i);
            let y = Oct::basis(j);
            res.ensure(triality::cross_via_w(&x, &y) == x.cross(&y), || {
                format!("cross via W failed on (e{i},e{j})")
            });
        }
    }
    for n in 0..samples {
        let x = sample::oct_vector(rng);
        let y = sample::oct_vector(rng);
        res.ensure(triality::cross_via_w(&x, &y) == x.cross(&y), || {
            format!("cross via W failed at sample {n}: x={x}, y={y}")
        });
    }
    res
}

fn check_triality_graded(rng: &mut ChaCha8Rng, samples: usize) -> CheckResult {
    let mut res = CheckResult::default();
    for i in 0..8 {
        for j in 0..8 {
            let gp = triality::graded_parts(&Oct::basis(i), &Oct::basis(j));
            res.ensure(gp.all_hold(), || format!("graded identities failed on (e{i},e{j})"));
            res.ensure(gp.symmetry_holds, || {
                format!("grade-k/grade-(7-k) symmetry failed on (e{i},e{j})")
            });
        }
    }
    for n in 0..samples {
        let a = sample::oct(rng);
        let b = sample::oct(rng);
        let gp = triality::graded_parts(&a, &b);
        for p in &gp.parts {
            res.ensure(p.holds(), || {
                format!("grade-{} identity failed at sample {n}: a={a}, b={b}", p.grade)
            });
        }
        res.ensure(gp.symmetry_holds, || {
            format!("vanishing symmetry failed at sample {n}: a={a}, b={b}")
        });
    }
    res
}

fn check_triality_vanish012(rng: &mut ChaCha8Rng, samples: usize) -> CheckResult {
    let mut res = CheckResult::default();
    let k = Constants::<Rat>::new();
    // The derivative of x2 e1 - x7 e4 annihilates the idempotent.
    let df = &Mv::from_generators(&[4, 7]) - &Mv::from_generators(&[1, 2]);
    res.ensure(df.mul(&k.i_minus).is_zero(), || "(e47 - e12) I- != 0".into());

    for n in 0..samples {
        // Construct a pair with vanishing scalar part: a0 b0 = avec . bvec.
        let mut a = sample::oct(rng);
        while a.real_part().is_zero() {
            a = sample::oct(rng);
        }
        let mut b = sample::oct(rng);
        let dot = a.vector_part().dot(&b.vector_part());
        let b0 = dot / a.real_part();
        let mut comps = b.components().clone();
        comps[0] = b0;
        b = Oct::from_components(comps);

        let gp = triality::graded_parts(&a, &b);
        res.ensure(gp.all_hold(), || format!("graded identities failed at sample {n}"));
        res.ensure(gp.low_grade_equivalence == Some(true), || {
            format!("grade-2..5 vanishing flags disagree at sample {n}: a={a}, b={b}")
        });
        // If grades 0,1,2 vanish then the whole product vanishes.
        let am = Mv::from_octonion(&a);
        let bm = Mv::from_octonion(&b);
        let abi = am.mul(&bm).mul(&k.i_minus);
        let low_zero = (0..=2).all(|g| abi.grade_project(g).is_zero());
        if low_zero {
            res.ensure(abi.is_zero(), || {
                format!("[abI]_0,1,2 = 0 but abI != 0 at sample {n}: a={a}, b={b}")
            });
        }
    }
    res
}

// ---------------------------------------------------------------------------
// Operator suites.

fn check_ops_decomp(rng: &mut ChaCha8Rng, samples: usize) -> CheckResult {
    let mut res = CheckResult::default();
    for n in 0..samples {
        let f = sample::omap(rng, 2);
        let mut reassembled = RatMap::zero(Algebra::Octonion);
        reassembled.set_component(0, ops::divergence(&f));
        let d0fv = f.vector_part().partial(0);
        let grad = ops::gradient(&f);
        let rot = ops::rotor(&f);
        for i in 1..8 {
            reassembled.add_to_component(i, d0fv.component(i));
            reassembled.add_to_component(i, grad.component(i));
            reassembled.add_to_component(i, rot.component(i));
        }
        res.ensure(reassembled == ops::d_left(&f), || {
            format!("operator decomposition failed at sample {n}: f = {f}")
        });
        res.ensure(
            ops::d_left(&f).sub(&ops::d_right(&f)) == rot.scale(&int(2)),
            || format!("D_x f - f D_x != 2 rotor at sample {n}: f = {f}"),
        );
    }
    res
}

fn check_ops_counterexamples(_rng: &mut ChaCha8Rng, _samples: usize) -> CheckResult {
    let mut res = CheckResult::default();
    let f1 = crate::parse::parse::<Rat>("x2*e1 - x7*e4", Algebra::Octonion).unwrap();
    let f2 = crate::parse::parse::<Rat>("x1 - x2*e3", Algebra::Octonion).unwrap();

    let c1 = ops::classify(&f1).unwrap();
    res.ensure(
        c1.left_regular && c1.right_regular && c1.b_regular && !c1.r_regular
            && c1.spinor_kernel == Some(true),
        || format!(
            "x2 e1 - x7 e4 flags wrong: left={} right={} b={} r={} spinor={:?}",
            c1.left_regular, c1.right_regular, c1.b_regular, c1.r_regular, c1.spinor_kernel
        ),
    );
    res.ensure(
        c1.curl_defects.iter().any(|(i, j, p)| (*i, *j) == (1, 2) && *p == crate::RatPoly::one()),
        || "curl defect d_2 f_1 - d_1 f_2 != 1 for x2 e1 - x7 e4".into(),
    );

    let c2 = ops::classify(&f2).unwrap();
    res.ensure(c2.left_regular && !c2.right_regular && !c2.b_regular && !c2.r_regular, || {
        format!(
            "x1 - x2 e3 flags wrong: left={} right={} b={} r={}",
            c2.left_regular, c2.right_regular, c2.b_regular, c2.r_regular
        )
    });
    let expected = crate::parse::parse::<Rat>("2*e1", Algebra::Octonion).unwrap();
    res.ensure(c2.d_right == expected, || {
        format!("f D_x residual of x1 - x2 e3: got {}, want 2 e1", c2.d_right)
    });

    // Right multiplication by e4 does not preserve the kernel:
    // D_x ((x1 - x2 e3) o e4) = 2 e5.
    let e4 = RatMap::constant_oct(&Oct::basis(4));
    let ge4 = f2.pointwise_mul(&e4);
    let d = ops::d_left(&ge4);
    let expected = crate::parse::parse::<Rat>("2*e5", Algebra::Octonion).unwrap();
    res.ensure(d == expected, || format!("D_x(g o e4): got {d}, want 2 e5"));

    // CK of the identity vector field.
    let xvec = crate::parse::parse::<Rat>(
        "x1*e1 + x2*e2 + x3*e3 + x4*e4 + x5*e5 + x6*e6 + x7*e7",
        Algebra::Octonion,
    )
    .unwrap();
    let ck = ops::ck_extension(&xvec).unwrap();
    let expected = crate::parse::parse::<Rat>(
        "7*x0 + x1*e1 + x2*e2 + x3*e3 + x4*e4 + x5*e5 + x6*e6 + x7*e7",
        Algebra::Octonion,
    )
    .unwrap();
    res.ensure(ck == expected, || format!("CK[xvec]: got {ck}"));
    let ck_rep = ops::classify(&ck).unwrap();
    res.ensure(ck_rep.b_regular, || "CK[xvec] is not B-regular".into());
    res
}

fn check_ops_ck(rng: &mut ChaCha8Rng, samples: usize) -> CheckResult {
    let mut res = CheckResult::default();
    let c = crate::parse::parse::<Rat>("3/2 - 2*e5", Algebra::Octonion).unwrap();
    res.ensure(ops::ck_extension(&c).unwrap() == c, || "CK of a constant is not itself".into());
    res.ensure(
        matches!(ops::ck_extension(&crate::parse::parse::<Rat>("x0", Algebra::Octonion).unwrap()),
            Err(crate::Error::DependsOnX0)),
        || "CK accepted data depending on x0".into(),
    );
    for n in 0..samples {
        let f = sample::real_data(rng, 3);
        let ck = ops::ck_extension(&f).unwrap();
        let rep = ops::classify(&ck).unwrap();
        res.ensure(rep.b_regular, || {
            format!("CK of real data not B-regular at sample {n}: f = {f}")
        });
    }
    res
}

fn check_ops_spinor(rng: &mut ChaCha8Rng, samples: usize) -> CheckResult {
    let mut res = CheckResult::default();
    for src in ["x2*e1 - x7*e4", "x1 - x2*e3", "x0"] {
        let f = crate::parse::parse::<Rat>(src, Algebra::Octonion).unwrap();
        let rep = ops::classify(&f).unwrap();
        let tests = ops::spinor_tests(&f);
        res.ensure(tests.left_flag() == rep.left_regular, || {
            format!("spinor left flag disagrees with classification for {src}")
        });
        res.ensure(tests.b_flag() == rep.b_regular, || {
            format!("spinor b flag disagrees with classification for {src}")
        });
    }
    for n in 0..samples {
        let f = sample::omap(rng, 2);
        let rep = ops::classify(&f).unwrap();
        let tests = ops::spinor_tests(&f);
        res.ensure(tests.left_flag() == rep.left_regular, || {
            format!("spinor left flag disagrees at sample {n}: f = {f}")
        });
        res.ensure(tests.b_flag() == rep.b_regular, || {
            format!("spinor b flag disagrees at sample {n}: f = {f}")
        });
    }
    // Nontrivial positives: left-regular degree-1 solutions.
    let m = regspace::build_matrix(SystemId::Left, 1);
    for (idx, v) in m.nullspace().into_iter().enumerate() {
        let f = regspace::vector_to_map(SystemId::Left, 1, &v);
        let tests = ops::spinor_tests(&f);
        res.ensure(tests.left_flag(), || {
            format!("left-regular nullspace vector {idx} fails the spinor left test")
        });
    }
    res
}

fn check_ops_kerdcl(rng: &mut ChaCha8Rng, samples: usize) -> CheckResult {
    let mut res = CheckResult::default();
    for n in 0..samples {
        let f = sample::paravector_map(rng, 2);
        let left = ops::cl_d_left(&f).is_zero();
        let right = ops::cl_d_right(&f).is_zero();
        let rep = ops::classify(&f).unwrap();
        res.ensure(left == right, || {
            format!("paravector left/right monogenicity disagree at sample {n}")
        });
        res.ensure(left == rep.r_regular, || {
            format!("monogenicity and Riesz system disagree at sample {n}")
        });
    }
    // Constructed solutions: the Riesz nullspace at degree 1.
    let m = regspace::build_matrix(SystemId::CliffordRiesz, 1);
    for (idx, v) in m.nullspace().into_iter().enumerate() {
        let f = regspace::vector_to_map(SystemId::CliffordRiesz, 1, &v).to_clifford_map();
        let rep = ops::classify(&f).unwrap();
        res.ensure(rep.left_regular && rep.right_regular && rep.r_regular, || {
            format!("Riesz nullspace vector {idx} is not monogenic both ways")
        });
    }
    res
}

fn check_ops_quat_degeneration(rng: &mut ChaCha8Rng, samples: usize) -> CheckResult {
    let mut res = CheckResult::default();
    for n in 0..samples {
        let f = sample::qmap(rng, 2, false);
        let rep = ops::classify(&f).unwrap();
        res.ensure(rep.b_regular == rep.r_regular, || {
            format!("quaternionic B and R classes differ at sample {n}: f = {f}")
        });
    }
    for k in 1..=2 {
        let m = regspace::build_matrix(SystemId::QuatB, k);
        for (idx, v) in m.nullspace().into_iter().enumerate() {
            let f = regspace::vector_to_map(SystemId::QuatB, k, &v);
            let rep = ops::classify(&f).unwrap();
            res.ensure(rep.b_regular && rep.r_regular, || {
                format!("degree-{k} QUAT_B nullspace vector {idx} not B- and R-regular")
            });
        }
    }
    res
}

fn check_ops_biaxial(rng: &mut ChaCha8Rng, samples: usize) -> CheckResult {
    let mut res = CheckResult::default();
    for n in 0..samples {
        let f = sample::omap(rng, 2);
        let blocks = biaxial::biaxial_d_left(&f);
        res.ensure(blocks.reassemble() == ops::d_left(&f), || {
            format!("biaxial blocks do not reassemble to D_x f at sample {n}: f = {f}")
        });
        let rep = ops::classify(&f).unwrap();
        res.ensure(blocks.left_system_zero() == rep.left_regular, || {
            format!("biaxial left system disagrees with classification at sample {n}")
        });
        res.ensure(blocks.b_system_zero() == rep.b_regular, || {
            format!("biaxial two-sided system disagrees with classification at sample {n}")
        });
    }
    let m = regspace::build_matrix(SystemId::Left, 1);
    for (idx, v) in m.nullspace().into_iter().enumerate() {
        let f = regspace::vector_to_map(SystemId::Left, 1, &v);
        res.ensure(biaxial::biaxial_d_left(&f).left_system_zero(), || {
            format!("biaxial left system nonzero on left-regular nullspace vector {idx}")
        });
    }
    res
}

fn check_ops_product_rules(rng: &mut ChaCha8Rng, samples: usize) -> CheckResult {
    let mut res = CheckResult::default();
    for n in 0..samples {
        let f = sample::qmap(rng, 2, true);
        let g = sample::qmap(rng, 2, true);
        for check in biaxial::product_rule_checks(&f, &g) {
            res.ensure(check.holds(), || {
                format!("product rule {} failed at sample {n}: f = {f}, g = {g}", check.name)
            });
        }
    }
    res
}

fn check_ops_vector_calc(rng: &mut ChaCha8Rng, samples: usize) -> CheckResult {
    let mut res = CheckResult::default();
    for n in 0..samples {
        let f = sample::omap(rng, 2);
        let g = sample::omap(rng, 2);
        let (lhs, rhs) = biaxial::vector_calc_check(&f, &g);
        res.ensure(lhs == rhs, || {
            format!("divergence-of-cross identity failed at sample {n}: f = {f}, g = {g}")
        });
    }
    res
}

// ---------------------------------------------------------------------------
// Dimension suites.

fn check_regspace_dims_oct(_rng: &mut ChaCha8Rng, _samples: usize) -> CheckResult {
    let mut res = CheckResult::default();
    let expected: [(u32, usize, usize, usize); 3] =
        [(1, 56, 49, 35), (2, 224, 176, 112), (3, 672, 483, 294)];
    for (k, dl, db, dr) in expected {
        let l = regspace::solution_dim(SystemId::Left, k).dimension;
        let b = regspace::solution_dim(SystemId::B, k).dimension;
        let r = regspace::solution_dim(SystemId::R, k).dimension;
        res.ensure(l == dl, || format!("degree-{k} LEFT dimension {l}, expected {dl}"));
        res.ensure(b == db, || format!("degree-{k} B dimension {b}, expected {db}"));
        res.ensure(r == dr, || format!("degree-{k} R dimension {r}, expected {dr}"));
        res.ensure(r < b && b < l, || format!("degree-{k} chain not strict: {r}, {b}, {l}"));
    }
    res
}

fn check_regspace_dims_quat(_rng: &mut ChaCha8Rng, _samples: usize) -> CheckResult {
    let mut res = CheckResult::default();
    let expected: [(u32, usize, usize); 2] = [(1, 12, 9), (2, 24, 16)];
    for (k, dl, dbr) in expected {
        let l = regspace::solution_dim(SystemId::QuatLeft, k).dimension;
        let b = regspace::solution_dim(SystemId::QuatB, k).dimension;
        let r = regspace::solution_dim(SystemId::QuatR, k).dimension;
        res.ensure(l == dl, || format!("degree-{k} QUAT_LEFT dimension {l}, expected {dl}"));
        res.ensure(b == dbr && r == dbr, || {
            format!("degree-{k} QUAT_B/QUAT_R dimensions {b}/{r}, expected {dbr}")
        });
        let rep = regspace::inclusion_report(k, true);
        res.ensure(rep.quat_br_rowspace_equal == Some(true), || {
            format!("degree-{k} QUAT_B and QUAT_R row spaces differ")
        });
    }
    res
}

fn check_regspace_nullspace(_rng: &mut ChaCha8Rng, _samples: usize) -> CheckResult {
    let mut res = CheckResult::default();
    for k in 1..=2u32 {
        for s in [
            SystemId::Left,
            SystemId::Right,
            SystemId::B,
            SystemId::R,
            SystemId::SpinorKernel,
            SystemId::CliffordRiesz,
            SystemId::QuatLeft,
            SystemId::QuatB,
            SystemId::QuatR,
        ] {
            let m = regspace::build_matrix(s, k);
            let basis = m.nullspace();
            res.ensure(basis.len() == m.unknowns() - m.rank(), || {
                format!("{} degree-{k}: nullspace size != dimension", s.label())
            });
            for (idx, v) in basis.iter().enumerate() {
                let f = regspace::vector_to_map(s, k, v);
                let ok = match s {
                    SystemId::Left => ops::classify(&f).unwrap().left_regular,
                    SystemId::Right => ops::classify(&f).unwrap().right_regular,
                    SystemId::B => ops::classify(&f).unwrap().b_regular,
                    SystemId::R => ops::classify(&f).unwrap().r_regular,
                    SystemId::SpinorKernel => {
                        ops::classify(&f).unwrap().spinor_kernel == Some(true)
                    }
                    SystemId::CliffordRiesz => {
                        ops::classify(&f.to_clifford_map()).unwrap().r_regular
                    }
                    SystemId::QuatLeft => ops::classify(&f).unwrap().left_regular,
                    SystemId::QuatB => ops::classify(&f).unwrap().b_regular,
                    SystemId::QuatR => ops::classify(&f).unwrap().r_regular,
                };
                res.ensure(ok, || {
                    format!("{} degree-{k}: nullspace vector {idx} fails classification", s.label())
                });
            }
        }
    }
    res
}

fn check_regspace_spinor(_rng: &mut ChaCha8Rng, _samples: usize) -> CheckResult {
    let mut res = CheckResult::default();
    let spinor1 = regspace::solution_dim(SystemId::SpinorKernel, 1);
    let r1 = regspace::solution_dim(SystemId::R, 1);
    res.ensure(spinor1.dimension > r1.dimension, || {
        format!(
            "spinor kernel dimension {} not larger than Riesz dimension {}",
            spinor1.dimension, r1.dimension
        )
    });
    let f1 = crate::parse::parse::<Rat>("x2*e1 - x7*e4", Algebra::Octonion).unwrap();
    let v = regspace::map_to_vector(SystemId::SpinorKernel, 1, &f1);
    res.ensure(regspace::build_matrix(SystemId::SpinorKernel, 1).in_nullspace(&v), || {
        "x2 e1 - x7 e4 not in the spinor kernel nullspace".into()
    });
    res.ensure(!regspace::build_matrix(SystemId::R, 1).in_nullspace(&v), || {
        "x2 e1 - x7 e4 unexpectedly solves the Riesz system".into()
    });

    // Grades 0,1,2 of the constraints already cut out the full kernel.
    for k in 1..=2u32 {
        let full = regspace::build_matrix(SystemId::SpinorKernel, k).rank();
        let graded = regspace::build_spinor_matrix_graded(k, &[0, 1, 2]).rank();
        res.ensure(full == graded, || {
            format!("degree-{k}: grade-(0,1,2) rank {graded} != full rank {full}")
        });
    }
    res
}

fn check_regspace_determinism(rng: &mut ChaCha8Rng, _samples: usize) -> CheckResult {
    use rand::seq::SliceRandom;
    let mut res = CheckResult::default();
    for s in [SystemId::Left, SystemId::B, SystemId::R, SystemId::QuatB] {
        for k in 1..=2u32 {
            let m = regspace::build_matrix(s, k);
            let baseline = m.rank();
            let mut shuffled = m.clone();
            shuffled.rows.shuffle(rng);
            res.ensure(shuffled.rank() == baseline, || {
                format!("{} degree-{k}: rank changed under row shuffle", s.label())
            });
            let mut reversed = m.clone();
            for row in &mut reversed.rows {
                row.reverse();
            }
            res.ensure(reversed.rank() == baseline, || {
                format!("{} degree-{k}: rank changed under column permutation", s.label())
            });
        }
    }
    res
}

/// All suites in fixed execution order.
pub fn checks() -> Vec<Check> {
    vec![
        Check {
            id: "oct.table",
            statement: "all 64 basis products match the multiplication table",
            run: check_oct_table,
        },
        Check {
            id: "oct.anticommute",
            statement: "e_i^2 = -1 and e_i e_j = -e_j e_i for distinct imaginary units",
            run: check_oct_anticommute,
        },
        Check {
            id: "oct.alternative",
            statement: "alternativity: x(xy) = (xx)y and (yx)x = y(xx)",
            run: check_oct_alternative,
        },
        Check {
            id: "oct.norm",
            statement: "norm composition: |xy|^2 = |x|^2 |y|^2",
            run: check_oct_norm,
        },
        Check {
            id: "oct.decomp",
            statement: "x o y = x0 y0 - x.y + x0 y + y0 x + x cross y",
            run: check_oct_decomp,
        },
        Check {
            id: "quatform.roundtrip",
            statement: "x = u + v o e4 splits and reassembles exactly",
            run: check_quatform_roundtrip,
        },
        Check {
            id: "quatform.e4",
            statement: "the six e4 product identities for quaternion pairs",
            run: check_quatform_e4,
        },
        Check {
            id: "quatform.cross_e4",
            statement: "the seven cross-product identities mixing 3-vectors and e4",
            run: check_quatform_cross_e4,
        },
        Check {
            id: "quatform.cross",
            statement: "cross product agrees with its quaternion-form expansion",
            run: check_quatform_cross,
        },
        Check {
            id: "quatform.product",
            statement: "octonion product agrees with its quaternion-form expansion",
            run: check_quatform_product,
        },
        Check {
            id: "cl.generators",
            statement: "e_i e_j + e_j e_i = -2 delta_ij for the seven generators",
            run: check_cl_generators,
        },
        Check {
            id: "cl.assoc",
            statement: "the geometric product is associative",
            run: check_cl_assoc,
        },
        Check {
            id: "cl.grades",
            statement: "grade projections are idempotent, partition the algebra, and xy = x^y - x.y",
            run: check_cl_grades,
        },
        Check {
            id: "cl.constants",
            statement: "W W^-1 = 1, the idempotents square to themselves, 16 I- = 1 - W + We' - e'",
            run: check_cl_constants,
        },
        Check {
            id: "cl.paravector",
            statement: "paravector product decomposition with the wedge replacing the cross",
            run: check_cl_paravector,
        },
        Check {
            id: "triality.product_w",
            statement: "a o b = [a b (1 - W)]_{0,1}",
            run: check_triality_product_w,
        },
        Check {
            id: "triality.product_idem",
            statement: "a o b = 16 [a b I-]_{0,1}",
            run: check_triality_product_idem,
        },
        Check {
            id: "triality.cross_w",
            statement: "a x b = -[(a ^ b) W]_1",
            run: check_triality_cross_w,
        },
        Check {
            id: "triality.graded",
            statement: "the eight closed forms of 16 [a b I-]_k and the k/(7-k) vanishing symmetry",
            run: check_triality_graded,
        },
        Check {
            id: "triality.vanish012",
            statement: "with [abI]_0 = 0 the grade-2..5 flags agree; grades 0,1,2 zero forces abI = 0",
            run: check_triality_vanish012,
        },
        Check {
            id: "ops.decomp",
            statement: "D_x f = divergence + d_0 f_vec + gradient + rotor; D_x f - f D_x = 2 rotor",
            run: check_ops_decomp,
        },
        Check {
            id: "ops.counterexamples",
            statement: "x2 e1 - x7 e4 and x1 - x2 e3 classify exactly as expected, with residuals",
            run: check_ops_counterexamples,
        },
        Check {
            id: "ops.ck",
            statement: "the extension of x0-free real data is B-regular; CK[xvec] = 7 x0 + xvec",
            run: check_ops_ck,
        },
        Check {
            id: "ops.spinor",
            statement: "left iff [d_x f I]_{0,1} = 0; B additionally needs [d_x f W]_1 = 0",
            run: check_ops_spinor,
        },
        Check {
            id: "ops.kerdcl",
            statement: "for paravector maps: d_x f = 0 iff f d_x = 0 iff the Riesz system holds",
            run: check_ops_kerdcl,
        },
        Check {
            id: "ops.quat_degeneration",
            statement: "quaternionic two-sided regularity coincides with the Riesz class",
            run: check_ops_quat_degeneration,
        },
        Check {
            id: "ops.biaxial",
            statement: "quaternion-form blocks reassemble to D_x f and characterise left/B classes",
            run: check_ops_biaxial,
        },
        Check {
            id: "ops.product_rules",
            statement: "the nine quaternionic product rules for the Dirac operators",
            run: check_ops_product_rules,
        },
        Check {
            id: "ops.vector_calc",
            statement: "D_vec . (f x g) = (D_vec x f) . g - f . (D_vec x g)",
            run: check_ops_vector_calc,
        },
        Check {
            id: "regspace.dims_oct",
            statement: "octonion dimension chain 35 < 49 < 56 at degree 1, strict through degree 3",
            run: check_regspace_dims_oct,
        },
        Check {
            id: "regspace.dims_quat",
            statement: "quaternion mode: B and R dimensions and row spaces coincide",
            run: check_regspace_dims_quat,
        },
        Check {
            id: "regspace.nullspace",
            statement: "every nullspace basis vector classifies into its system's class",
            run: check_regspace_nullspace,
        },
        Check {
            id: "regspace.spinor",
            statement: "spinor kernel strictly exceeds the Riesz class; grade-(0,1,2) rows give full rank",
            run: check_regspace_spinor,
        },
        Check {
            id: "regspace.determinism",
            statement: "ranks are invariant under row and column permutations",
            run: check_regspace_determinism,
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_suite_passes() {
        let report = run_all(7, 25);
        for c in &report.checks {
            assert!(c.passed(), "{} failed: {:?}", c.id, c.failures);
        }
        assert!(report.passed());
    }

    #[test]
    fn single_sample_runs_pass() {
        let report = run_all(1, 1);
        assert!(report.passed());
    }

    #[test]
    fn reports_are_reproducible() {
        let a = run_all(42, 10);
        let b = run_all(42, 10);
        let fmt = |r: &VerifyReport| {
            r.checks
                .iter()
                .map(|c| format!("{}:{}:{:?}", c.id, c.checks_run, c.failures))
                .collect::<Vec<_>>()
                .join("\n")
        };
        assert_eq!(fmt(&a), fmt(&b));
    }

    #[test]
    fn corrupted_table_is_detected() {
        // Same machinery as the real table check, against a broken fixture.
        let mut broken = OCT_TABLE;
        broken[1][2] = (1, 4); // pretend e1 o e2 = e4
        let mut res = CheckResult::default();
        table_products_against(&broken, &mut res);
        assert_eq!(res.failures.len(), 1);
        assert!(res.failures[0].contains("e1 o e2"));
    }

    #[test]
    fn run_by_id_finds_checks() {
        assert!(run_by_id("oct.table", 0, 1).unwrap().passed());
        assert!(run_by_id("nonexistent", 0, 1).is_none());
    }
}
