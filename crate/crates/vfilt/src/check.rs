//! Randomized self-check of the library's invariants, run by `vfilt check`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use vfilt_core::bfun::{c_poly, check_symmetry, root_class_count, transport, transport_by_gcd, BFunction};
use vfilt_core::filtration::{
    dt_action, fs_hodge_test, grv_exponent, hodge_level, hodge_level_checked, nu, nu_by_transport, p_function,
    r_lambda, t_action, PiSets,
};
use vfilt_core::oracle::{
    c_poly_bruteforce, c_poly_partial, jordan_weight_dim, p_function_greedy_with, stabilization_bound,
    transport_bruteforce,
};
use vfilt_core::ratpoly::{int, rat, Rational, RootPoly};
use vfilt_core::spaces::{ideal_weight_membership, Route, Scope, SpaceFamily};

const MAX_REPORTED: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Tally {
    name: &'static str,
    cases: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally { name, cases: 0, failures: Vec::new() }
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failures.len() < MAX_REPORTED {
            self.failures.push(detail());
        }
    }

    fn finish(self) -> CheckOutcome {
        CheckOutcome { name: self.name, cases: self.cases, failures: self.failures }
    }
}

pub fn random_root(rng: &mut impl Rng) -> Rational {
    match rng.gen_range(0..3) {
        0 => int(rng.gen_range(-5..=5)),
        1 => rat(rng.gen_range(-10..=10), 2),
        _ => rat(rng.gen_range(-15..=15), 3),
    }
}

pub fn random_poly(rng: &mut impl Rng, max_deg: usize) -> RootPoly {
    let deg = rng.gen_range(0..=max_deg);
    let roots: Vec<Rational> = (0..deg).map(|_| random_root(rng)).collect();
    RootPoly::from_shifts(roots.iter())
}

pub fn random_bfunction(rng: &mut impl Rng, max_deg: usize) -> BFunction {
    let deg = rng.gen_range(1..=max_deg);
    BFunction::new((0..deg).map(|_| random_root(rng)).collect())
}

/// `j/4` with `-8 ≤ j ≤ 16`.
pub fn random_alpha(rng: &mut impl Rng) -> Rational {
    rat(rng.gen_range(-8..=16), 4)
}

pub fn builtin_families() -> Vec<SpaceFamily> {
    let mut out = Vec::new();
    for n in 1..=4 {
        out.push(SpaceFamily::builtin("det", n).expect("det"));
        out.push(SpaceFamily::builtin("symdet", n).expect("symdet"));
    }
    for n in [2, 4] {
        out.push(SpaceFamily::builtin("pfaffian", n).expect("pfaffian"));
    }
    out.push(SpaceFamily::builtin("e6", 3).expect("e6"));
    out
}

fn c_poly_routes(rng: &mut ChaCha8Rng, cases: usize) -> CheckOutcome {
    let mut t = Tally::new("c_{p,q}: recursion vs partial gcds");
    for _ in 0..cases {
        let (p, q) = (random_poly(rng, 6), random_poly(rng, 6));
        let (a, b) = (c_poly(&p, &q), c_poly_bruteforce(&p, &q));
        t.record(a == b, || format!("p = {p}, q = {q}: {a} vs {b}"));
    }
    t.finish()
}

fn stabilization(rng: &mut ChaCha8Rng, cases: usize) -> CheckOutcome {
    let mut t = Tally::new("partial gcds stable past the bound");
    for _ in 0..cases {
        let (p, q) = (random_poly(rng, 6), random_poly(rng, 6));
        let n = stabilization_bound(&p, &q);
        let g = c_poly_partial(&p, &q, n);
        let ok = g == c_poly_partial(&p, &q, n + 1) && g == c_poly_partial(&p, &q, n + 5);
        t.record(ok, || format!("p = {p}, q = {q}, N = {n}"));
    }
    t.finish()
}

fn transport_routes(rng: &mut ChaCha8Rng, cases: usize) -> CheckOutcome {
    let mut t = Tally::new("transport: greedy vs gcd vs brute force");
    for _ in 0..cases {
        let (b, p) = (random_bfunction(rng, 6), random_poly(rng, 6));
        let g = transport(&b, &p);
        let ok = g == transport_by_gcd(&b, &p) && g == transport_bruteforce(&b, &p);
        t.record(ok, || format!("b = {b}, p = {p}"));
    }
    t.finish()
}

fn p_function_routes(rng: &mut ChaCha8Rng, cases: usize) -> CheckOutcome {
    let mut t = Tally::new("p-function: closed form vs greedy oracle");
    for _ in 0..cases {
        let (b, alpha) = (random_bfunction(rng, 4), random_alpha(rng));
        let closed = p_function(&b, &alpha).poly;
        let greedy = p_function_greedy_with(&b, &alpha, |xs| rng.gen_range(0..xs.len()));
        t.record(closed == greedy, || format!("b = {b}, α = {alpha}: {closed} vs {greedy}"));
    }
    t.finish()
}

fn nu_and_degree(rng: &mut ChaCha8Rng, cases: usize) -> CheckOutcome {
    let mut t = Tally::new("ν by counting vs transport; deg p = jump sum");
    for _ in 0..cases {
        let (b, alpha) = (random_bfunction(rng, 5), random_alpha(rng));
        let ok = nu(&b, &alpha) == nu_by_transport(&b, &alpha) && hodge_level_checked(&b, &alpha).is_ok();
        t.record(ok, || format!("b = {b}, α = {alpha}"));
    }
    t.finish()
}

fn jordan() -> CheckOutcome {
    let mut t = Tally::new("W_ℓ gr_V lengths vs explicit kernels and images");
    let alpha = rat(1, 3);
    for v in 0..=8usize {
        for ell in -10..=10 {
            let (a, b) = (grv_exponent(v, ell), jordan_weight_dim(v, &alpha, ell));
            t.record(a == b, || format!("ν = {v}, ℓ = {ell}: {a} vs {b}"));
        }
    }
    t.finish()
}

fn identities(rng: &mut ChaCha8Rng, cases: usize) -> CheckOutcome {
    let mut t = Tally::new("p-function structural identities");
    let eps = rat(1, 1000);
    let one = int(1);
    for _ in 0..cases {
        let b = random_bfunction(rng, 5);
        let alpha = rat(rng.gen_range(-24..=48), 12);
        let p = p_function(&b, &alpha);
        let v = nu(&b, &alpha) as u32;
        let shifted = p_function(&b.shift(&one), &(&alpha + &one)).poly == p.poly.shift(&one);
        let jump = p_function(&b, &(&alpha + &eps)).poly
            == p.poly.mul(&RootPoly::from_roots([(-alpha.clone(), v)]));
        let monotone = p.poly.divides(&p_function(&b, &(&alpha + rat(1, 2))).poly);
        let no_root = p.poly.multiplicity(&-alpha.clone()) == 0;
        let bounded = v as usize <= b.degree();
        let left = hodge_level(&b, &(&alpha - &eps)) == hodge_level(&b, &alpha);
        let (flag, back) = dt_action(&t_action(&p));
        let round_trip = flag && back == p;
        let ok = shifted && jump && monotone && no_root && bounded && left && round_trip;
        t.record(ok, || format!("b = {b}, α = {alpha}"));
    }
    t.finish()
}

fn shift_law(rng: &mut ChaCha8Rng, cases: usize) -> CheckOutcome {
    let mut t = Tally::new("b_{λ+σ}(s) = b_λ(s+1) on built-in families");
    for fam in builtin_families() {
        let sigma = fam.sigma();
        let all = fam.enumerate(5, Scope::Module);
        for w in all.choose_multiple(rng, cases.min(all.len())) {
            let up: Vec<i64> = w.iter().zip(&sigma).map(|(a, b)| a + b).collect();
            let ok = match (fam.b_of_weight(w), fam.b_of_weight(&up)) {
                (Ok(b), Ok(c)) => c == b.shift(&int(1)),
                _ => false,
            };
            t.record(ok, || format!("{} n = {} at {w:?}", fam.name(), fam.n()));
        }
    }
    t.finish()
}

fn ideal_routes() -> CheckOutcome {
    let mut t = Tally::new("Hodge ideals: degree route vs inequalities");
    let mut fams = builtin_families();
    fams.push(SpaceFamily::builtin("det", 5).expect("det"));
    fams.push(SpaceFamily::builtin("symdet", 5).expect("symdet"));
    fams.push(SpaceFamily::builtin("pfaffian", 6).expect("pfaffian"));
    for fam in fams {
        for alpha in [rat(1, 4), rat(1, 2), rat(3, 4), int(1)] {
            for k in 0..=5 {
                for w in fam.enumerate(6, Scope::StructureSheaf) {
                    let r = ideal_weight_membership(&fam, k, &alpha, &w, Route::Both);
                    t.record(r.is_ok(), || format!("{} n = {}: {}", fam.name(), fam.n(), r.unwrap_err()));
                }
            }
        }
    }
    t.finish()
}

fn fs_test(rng: &mut ChaCha8Rng, cases: usize) -> CheckOutcome {
    let mut t = Tally::new("Π-set Hodge test with structure-sheaf Π_k");
    for _ in 0..cases {
        let b = random_bfunction(rng, 4);
        let alpha = rat(rng.gen_range(1..=16), 4);
        let k = rng.gen_range(0..=8);
        let pi = PiSets::structure_sheaf(r_lambda(&b), [k]);
        let want = hodge_level(&b, &alpha) as i64 <= k;
        let got = fs_hodge_test(&b, &alpha, &pi, k);
        t.record(got == Ok(want), || format!("b = {b}, α = {alpha}, k = {k}: {got:?}"));
    }
    t.finish()
}

fn root_classes(rng: &mut ChaCha8Rng, cases: usize) -> CheckOutcome {
    let mut t = Tally::new("root count per class α + Z is constant");
    for fam in builtin_families() {
        let view = fam.affine_view();
        let all = fam.enumerate(6, Scope::Module);
        let samples: Vec<Vec<i64>> = all
            .choose_multiple(rng, cases.min(all.len()))
            .map(|w| fam.to_affine_coords(w).expect("admissible"))
            .collect();
        for alpha in [int(0), rat(1, 2), rat(1, 3)] {
            let r = root_class_count(&view, &alpha, &samples);
            t.record(r.is_ok(), || format!("{} n = {}, α = {alpha}", fam.name(), fam.n()));
        }
    }
    t.finish()
}

fn e6_symmetry() -> CheckOutcome {
    let mut t = Tally::new("E6 b-function symmetry");
    let view = SpaceFamily::builtin("e6", 3).expect("e6").affine_view();
    let mut samples = Vec::new();
    for a1 in 0..=6 {
        for a2 in 0..=6 {
            for a3 in -6..=6 {
                samples.push(vec![a1, a2, a3]);
            }
        }
    }
    let rep = check_symmetry(&view, 27, |a| vec![a[1], a[0], -a[0] - a[1] - a[2]], &samples);
    t.cases = rep.checked;
    if let Some(a) = rep.counterexample {
        t.failures.push(format!("fails at {a:?}"));
    }
    t.finish()
}

/// Runs every check. Each one draws from its own generator seeded from
/// `seed`, so results do not depend on scheduling.
pub fn run(seed: u64, cases: usize) -> Vec<CheckOutcome> {
    type Job = fn(&mut ChaCha8Rng, usize) -> CheckOutcome;
    let jobs: Vec<Job> = vec![
        c_poly_routes,
        stabilization,
        transport_routes,
        p_function_routes,
        nu_and_degree,
        |_, _| jordan(),
        identities,
        shift_law,
        |_, _| ideal_routes(),
        fs_test,
        root_classes,
        |_, _| e6_symmetry(),
    ];
    jobs.par_iter()
        .enumerate()
        .map(|(i, job)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(i as u64));
            job(&mut rng, cases)
        })
        .collect()
}
