//! Verification suites and their reports.
//!
//! Every check compares two canonical serializations; since all values are
//! exact and normal forms are unique, string equality is element equality.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bitableaux::{
    basis_report, bideterminant, bipermanent_rows, capelli_det_bitableau, capelli_per_bitableau, koszul_map,
    BiTableau, BitabError, BitabKind, YoungShape, YoungTableau,
};
use crate::center::{self, CenterError, Weight};
use crate::exact::Rational;
use crate::poly::{lp, x, GlPolynomial, SymPolynomial, X};
use crate::superpoly::{
    all_proper_monomials, bracket, capelli_operator_apply, cayley_apply, random_proper_monomial, SuperPolyError,
};
use crate::symbol::Symbol;
use crate::uea::{cdet, cper, is_central, Generator, NcMatrix, UeaElement, UeaError};
use crate::virt::{
    act, act_balanced, act_word, capelli_pi, capelli_pi_full_straightening, is_irregular, pi_of_adjoint,
    pi_via_adjoint, random_balanced, virtual_capelli_word, VirtError,
};

pub const DEFAULT_SEED: u64 = 1893;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SuiteError {
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl From<VirtError> for SuiteError {
    fn from(e: VirtError) -> Self {
        match e {
            VirtError::Uncertified(_) => SuiteError::Internal(e.to_string()),
            other => SuiteError::InvalidConfig(other.to_string()),
        }
    }
}

impl From<BitabError> for SuiteError {
    fn from(e: BitabError) -> Self {
        match e {
            BitabError::Virt(v) => v.into(),
            other => SuiteError::InvalidConfig(other.to_string()),
        }
    }
}

impl From<CenterError> for SuiteError {
    fn from(e: CenterError) -> Self {
        match e {
            CenterError::Bitab(b) => b.into(),
            CenterError::NotEigenvector => SuiteError::Internal(e.to_string()),
            other => SuiteError::InvalidConfig(other.to_string()),
        }
    }
}

impl From<UeaError> for SuiteError {
    fn from(e: UeaError) -> Self {
        SuiteError::InvalidConfig(e.to_string())
    }
}

impl From<SuperPolyError> for SuiteError {
    fn from(e: SuperPolyError) -> Self {
        SuiteError::InvalidConfig(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Capelli,
    VirtualWord,
    Epimorphism,
    Koszul,
    Basis,
    Centrality,
    Expansion,
    Generating,
    HarishChandra,
    Golden,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Capelli,
        Suite::VirtualWord,
        Suite::Epimorphism,
        Suite::Koszul,
        Suite::Basis,
        Suite::Centrality,
        Suite::Expansion,
        Suite::Generating,
        Suite::HarishChandra,
        Suite::Golden,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Capelli => "capelli",
            Suite::VirtualWord => "virtual-word",
            Suite::Epimorphism => "epimorphism",
            Suite::Koszul => "koszul",
            Suite::Basis => "basis",
            Suite::Centrality => "centrality",
            Suite::Expansion => "expansion",
            Suite::Generating => "generating",
            Suite::HarishChandra => "harish-chandra",
            Suite::Golden => "golden",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = SuiteError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        let alias = match key.as_str() {
            "capelli-identity" => "capelli",
            "epimorphism-oracle" => "epimorphism",
            "bitableaux-koszul" => "koszul",
            "center-identities" => "generating",
            "harishchandra" | "hc" => "harish-chandra",
            other => other,
        };
        Suite::ALL
            .into_iter()
            .find(|su| su.name() == alias)
            .ok_or_else(|| SuiteError::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    pub n: u32,
    /// Number of places; defaults to `n`.
    pub d: Option<u32>,
    /// Capelli generator index, or the cell bound for tableau suites.
    pub k: Option<u32>,
    pub p: Option<u32>,
    pub r: Option<u32>,
    pub seed: u64,
    /// Random forms or balanced monomials drawn per check group.
    pub samples: usize,
    /// When false every `ms` field is written as 0, making reports byte-stable.
    pub timing: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { n: 2, d: None, k: None, p: None, r: None, seed: DEFAULT_SEED, samples: 25, timing: true }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<(), SuiteError> {
        if self.n == 0 || self.d == Some(0) || self.samples == 0 {
            return Err(SuiteError::InvalidConfig("n, d and samples must be positive".into()));
        }
        Ok(())
    }

    fn d(&self) -> u32 {
        self.d.unwrap_or(self.n)
    }

    fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        rng
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub expected: String,
    pub actual: String,
    pub ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            if c.pass {
                out.push_str(&format!("PASS {}\n", c.name));
            } else {
                out.push_str(&format!("FAIL {}\n  expected: {}\n  actual:   {}\n", c.name, c.expected, c.actual));
            }
        }
        let passed = self.checks.iter().filter(|c| c.pass).count();
        out.push_str(&format!(
            "{}: {} ({}/{} checks)\n",
            self.suite,
            if self.pass { "PASS" } else { "FAIL" },
            passed,
            self.checks.len()
        ));
        out
    }
}

type CheckFn = Box<dyn Fn() -> Result<(String, String), SuiteError> + Send + Sync>;

struct Plan {
    items: Vec<(String, CheckFn)>,
}

impl Plan {
    fn new() -> Self {
        Plan { items: Vec::new() }
    }

    fn add(&mut self, name: String, f: impl Fn() -> Result<(String, String), SuiteError> + Send + Sync + 'static) {
        self.items.push((name, Box::new(f)));
    }

    fn run(self, suite: &str, timing: bool) -> Result<Report, SuiteError> {
        let mut checks: Vec<Check> = self
            .items
            .into_par_iter()
            .map(|(name, f)| {
                let start = Instant::now();
                let (expected, actual) = f()?;
                let ms = if timing { start.elapsed().as_millis() as u64 } else { 0 };
                Ok(Check { name, pass: expected == actual, expected, actual, ms })
            })
            .collect::<Result<_, SuiteError>>()?;
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        let pass = checks.iter().all(|c| c.pass);
        Ok(Report { suite: suite.to_string(), checks, pass })
    }
}

fn yes(b: bool, t: &str, f: &str) -> String {
    if b { t } else { f }.to_string()
}

/// Runs one suite.
pub fn run_suite(suite: Suite, config: &SuiteConfig) -> Result<Report, SuiteError> {
    config.validate()?;
    let plan = match suite {
        Suite::Capelli => plan_capelli(config),
        Suite::VirtualWord => plan_virtual_word(config),
        Suite::Epimorphism => plan_epimorphism(config),
        Suite::Koszul => plan_koszul(config),
        Suite::Basis => plan_basis(config),
        Suite::Centrality => plan_centrality(config),
        Suite::Expansion => plan_expansion(config),
        Suite::Generating => plan_generating(config),
        Suite::HarishChandra => plan_harish_chandra(config),
        Suite::Golden => plan_golden(),
    }?;
    plan.run(suite.name(), config.timing)
}

/// Runs several suites and merges them into one report named `name`;
/// check names are prefixed by their suite.
pub fn run_suites(name: &str, suites: &[Suite], config: &SuiteConfig) -> Result<Report, SuiteError> {
    let mut checks = Vec::new();
    for &s in suites {
        for mut c in run_suite(s, config)?.checks {
            c.name = format!("{}/{}", s.name(), c.name);
            checks.push(c);
        }
    }
    checks.sort_by(|a, b| a.name.cmp(&b.name));
    let pass = checks.iter().all(|c| c.pass);
    Ok(Report { suite: name.to_string(), checks, pass })
}

fn plan_capelli(cfg: &SuiteConfig) -> Result<Plan, SuiteError> {
    let (n, d) = (cfg.n as usize, cfg.d() as usize);
    let mut rng = cfg.rng(1);
    let mut plan = Plan::new();
    for i in 0..cfg.samples {
        let f = random_proper_monomial(&mut rng, n, d, 3, 5);
        let name = format!("capelli_identity[n={n},d={d}]#{i:02}");
        plan.add(name, move || {
            let lhs = capelli_operator_apply(n, d, &f)?;
            let rhs = match n.cmp(&d) {
                std::cmp::Ordering::Greater => crate::superpoly::SuperPolynomial::zero(),
                std::cmp::Ordering::Equal => bracket(n, n)?.mul(&cayley_apply(n, &f)?),
                std::cmp::Ordering::Less => act_balanced(&virtual_capelli_word(n as u32, Symbol::virtual_even(1)), &f),
            };
            Ok((rhs.to_string(), lhs.to_string()))
        });
    }
    Ok(plan)
}

fn plan_virtual_word(cfg: &SuiteConfig) -> Result<Plan, SuiteError> {
    let (n, d) = (cfg.n as usize, cfg.d() as usize);
    let mut rng = cfg.rng(2);
    let mut plan = Plan::new();
    for i in 0..cfg.samples {
        let f = random_proper_monomial(&mut rng, n, d, 3, 5);
        plan.add(format!("virtual_capelli_word[n={n},d={d}]#{i:02}"), move || {
            let w = virtual_capelli_word(n as u32, Symbol::virtual_even(1));
            Ok((capelli_operator_apply(n, d, &f)?.to_string(), act_balanced(&w, &f).to_string()))
        });
    }
    Ok(plan)
}

fn plan_epimorphism(cfg: &SuiteConfig) -> Result<Plan, SuiteError> {
    let n = cfg.n;
    let mut rng = cfg.rng(3);
    let mut plan = Plan::new();
    for i in 0..cfg.samples {
        let b = random_balanced(&mut rng, n, 3, 3);
        let tag = format!("[n={n}]#{i:02}");
        {
            let b = b.clone();
            plan.add(format!("action_oracle{tag}"), move || {
                let u = capelli_pi(&b)?;
                let forms = all_proper_monomials(n as usize, n as usize, 3);
                let agree = forms.iter().filter(|f| act_balanced(&b, f) == act(&u, f)).count();
                Ok((format!("{} forms agree", forms.len()), format!("{agree} forms agree")))
            });
        }
        {
            let b = b.clone();
            plan.add(format!("pi_two_paths{tag}"), move || {
                Ok((capelli_pi(&b)?.to_string(), pi_via_adjoint(&b)?.to_string()))
            });
        }
        {
            let b = b.clone();
            plan.add(format!("pi_full_straightening{tag}"), move || {
                Ok((capelli_pi(&b)?.to_string(), capelli_pi_full_straightening(&b)?.to_string()))
            });
        }
        {
            let b = b.clone();
            plan.add(format!("pi_renaming{tag}"), move || {
                Ok((capelli_pi(&b)?.to_string(), capelli_pi(&b.with_fresh_symbols(7))?.to_string()))
            });
        }
        {
            let b = b.clone();
            plan.add(format!("pi_equivariance{tag}"), move || {
                let pb = capelli_pi(&b)?;
                let mut bad = 0;
                for i in 1..=n {
                    for j in 1..=n {
                        let g = Generator::proper(i, j);
                        if pi_of_adjoint(g, &b)? != crate::uea::adjoint(g, &pb)? {
                            bad += 1;
                        }
                    }
                }
                Ok(("0 mismatches".into(), format!("{bad} mismatches")))
            });
        }
        plan.add(format!("irregular_kernel{tag}"), move || {
            let mut w = b.annihilations().to_vec();
            w.extend_from_slice(b.creations());
            let forms = all_proper_monomials(n as usize, n as usize, 3);
            let zero = forms.iter().filter(|f| act_word(&w, f).is_zero()).count();
            Ok((
                format!("irregular, {} zero images", forms.len()),
                format!("{}, {zero} zero images", yes(is_irregular(&w), "irregular", "regular")),
            ))
        });
    }
    Ok(plan)
}

fn plan_koszul(cfg: &SuiteConfig) -> Result<Plan, SuiteError> {
    let n = cfg.n;
    let max_cells = cfg.k.unwrap_or(3) as usize;
    let mut plan = Plan::new();
    for cells in 1..=max_cells {
        for shape in YoungShape::partitions(cells) {
            let parts = shape.parts().to_vec();
            let label = parts.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
            for kind in [BitabKind::Det, BitabKind::Per] {
                let shape = shape.clone();
                let which = match kind {
                    BitabKind::Det => "det",
                    BitabKind::Per => "per",
                };
                plan.add(format!("koszul_{which}[n={n},shape=({label})]"), move || {
                    let fills = YoungTableau::all_fillings(&shape, n);
                    let mut agree = 0;
                    let mut first_bad = None;
                    for s in &fills {
                        for t in &fills {
                            let bt = BiTableau::new(s.clone(), t.clone())?;
                            let (u, target) = match kind {
                                BitabKind::Det => (capelli_det_bitableau(&bt, n)?, bideterminant(&bt)),
                                BitabKind::Per => (capelli_per_bitableau(&bt, n)?, bipermanent_rows(&bt)),
                            };
                            if koszul_map(&u)? == target {
                                agree += 1;
                            } else if first_bad.is_none() {
                                first_bad = Some(bt.to_string());
                            }
                        }
                    }
                    let total = fills.len() * fills.len();
                    let actual = match first_bad {
                        None => format!("{agree}/{total} pairs agree"),
                        Some(b) => format!("{agree}/{total} pairs agree, first mismatch {b}"),
                    };
                    Ok((format!("{total}/{total} pairs agree"), actual))
                });
            }
        }
    }
    for m in 1..=n {
        plan.add(format!("koszul_capelli_determinant[n={m}]"), move || {
            let s: Vec<u32> = (1..=m).rev().collect();
            let t: Vec<u32> = (1..=m).collect();
            let u = capelli_det_bitableau(&BiTableau::from_rows(vec![s], vec![t])?, m)?;
            Ok((letterplace_det(m).to_string(), koszul_map(&u)?.to_string()))
        });
    }
    Ok(plan)
}

/// `det[(x_i|x_j)]` by direct expansion.
fn letterplace_det(m: u32) -> GlPolynomial {
    let mut out = GlPolynomial::zero();
    for (perm, odd) in crate::superpoly::permutations_with_sign(m as usize) {
        let factors: Vec<GlPolynomial> =
            perm.iter().enumerate().map(|(j, &i)| lp(i as u32 + 1, j as u32 + 1)).collect();
        let sign = if odd { Rational::from_int(-1) } else { Rational::ONE };
        out.add_scaled(&GlPolynomial::product(&factors), &sign);
    }
    out
}

fn plan_basis(cfg: &SuiteConfig) -> Result<Plan, SuiteError> {
    let n = cfg.n;
    let max_cells = cfg.k.unwrap_or(3) as usize;
    let mut plan = Plan::new();
    for kind in [BitabKind::Det, BitabKind::Per] {
        let which = match kind {
            BitabKind::Det => "semistandard_det",
            BitabKind::Per => "cosemistandard_per",
        };
        plan.add(format!("basis_{which}[n={n},cells<={max_cells}]"), move || {
            let r = basis_report(n, max_cells, kind)?;
            let counts: Vec<String> = r.counts.iter().map(|(k, a, _)| format!("deg{k}:{a}")).collect();
            let dims: Vec<String> = r.counts.iter().map(|(k, _, b)| format!("deg{k}:{b}")).collect();
            Ok((
                format!("rank {} counts {}", r.total, dims.join(" ")),
                format!("rank {} counts {}", r.rank, counts.join(" ")),
            ))
        });
    }
    Ok(plan)
}

fn central_check(u: &UeaElement, n: u32) -> Result<(String, String), SuiteError> {
    Ok(("central".into(), yes(is_central(u, n as usize)?, "central", "not central")))
}

fn plan_centrality(cfg: &SuiteConfig) -> Result<Plan, SuiteError> {
    let n = cfg.n;
    let pmax = cfg.p.unwrap_or(3);
    let rmax = cfg.r.unwrap_or(3);
    let mut plan = Plan::new();
    for k in 1..=n {
        plan.add(format!("central_H[n={n},k={k}]"), move || central_check(&center::capelli_generator(n, k)?, n));
        plan.add(format!("central_Cs_coefficient[n={n},h={k}]"), move || {
            central_check(&center::c_coefficient(n, k)?, n)
        });
    }
    for p in 0..=pmax {
        plan.add(format!("central_K[n={n},p={p}]"), move || central_check(&center::deruyts(n, p)?, n));
        plan.add(format!("central_C[n={n},p={p}]"), move || central_check(&center::c_n(n, p)?, n));
    }
    for p in 0..=5 {
        plan.add(format!("central_Hp[n={n},p={p}]"), move || {
            central_check(&center::h_n_value(n, &Rational::from_int(p)), n)
        });
    }
    for r in 1..=rmax {
        plan.add(format!("central_P[n={n},r={r}]"), move || {
            central_check(&center::permanental_generator(n, r)?, n)
        });
    }
    Ok(plan)
}

fn plan_expansion(cfg: &SuiteConfig) -> Result<Plan, SuiteError> {
    let n = cfg.n;
    let pmax = cfg.p.unwrap_or(2);
    let mut plan = Plan::new();
    for p in 0..=pmax {
        plan.add(format!("expansion_theorem[n={n},p={p}]"), move || {
            let (lhs, rhs) = center::expansion_sides(n, p)?;
            Ok((lhs.to_string(), rhs.to_string()))
        });
    }
    plan.add(format!("deruyts_collapse[n={n}]"), move || {
        Ok((center::capelli_generator(n, n)?.to_string(), center::deruyts(n, 1)?.to_string()))
    });
    Ok(plan)
}

fn plan_generating(cfg: &SuiteConfig) -> Result<Plan, SuiteError> {
    let n = cfg.n;
    let mut plan = Plan::new();
    plan.add(format!("generating_Ht[n={n}]"), move || {
        Ok((center::h_n_t_expansion(n)?.to_text("t"), center::h_n_t(n).to_text("t")))
    });
    plan.add(format!("generating_Cs_equals_Ht[n={n}]"), move || {
        let composed =
            center::compose_linear(&center::h_n_t(n), &Rational::from_int(-1), &Rational::from_int(n as i64 - 1));
        Ok((composed.to_text("s"), center::capelli_determinant_c(n).to_text("s")))
    });
    for h in 0..=n {
        plan.add(format!("generating_Cs_minor_sum[n={n},h={h}]"), move || {
            Ok((center::c_coefficient_minor_sum(n, h)?.to_string(), center::c_coefficient(n, h)?.to_string()))
        });
    }
    for h in 0..n {
        plan.add(format!("stirling_relation[n={n},h={h}]"), move || {
            Ok((center::stirling_rhs(n, h, false)?.to_string(), center::c_coefficient(n, n - h)?.to_string()))
        });
        plan.add(format!("stirling_relation_alternating[n={n},h={h}]"), move || {
            Ok((center::stirling_rhs(n, h, true)?.to_string(), center::c_coefficient(n, n - h)?.to_string()))
        });
    }
    for p in 0..=5u32 {
        plan.add(format!("Hp_equals_Cp[n={n},p={p}]"), move || {
            Ok((center::c_n(n, p)?.to_string(), center::h_n_value(n, &Rational::from_int(p as i64)).to_string()))
        });
    }
    plan.add(format!("shifted_elementary_generating[n={n}]"), move || {
        let (lhs, rhs) = shifted_generating_sides(n);
        Ok((rhs.to_string(), lhs.to_string()))
    });
    plan.add(format!("triangular_expansion_matrix[n={n}]"), move || {
        Ok(("nonsingular triangular".into(), triangular_label(&center::expansion_matrix(n))))
    });
    plan.add(format!("triangular_stirling_matrix[n={n}]"), move || {
        Ok(("nonsingular triangular".into(), triangular_label(&center::stirling_matrix(n, false))))
    });
    Ok(plan)
}

fn triangular_label(m: &[Vec<Rational>]) -> String {
    let tri = center::is_nonsingular_lower_triangular(m) || center::is_nonsingular_upper_triangular(m);
    yes(tri, "nonsingular triangular", "not triangular")
}

/// Both sides of `Σ_j (−1)^{n−j}(t)_{n−j} e_j^*(x) = ∏_i (x_i − t + n − i)`,
/// with `t` carried as the extra variable `x_{n+1}`.
pub fn shifted_generating_sides(n: u32) -> (SymPolynomial, SymPolynomial) {
    let t = x(n + 1);
    let falling = |k: u32| {
        let mut acc = SymPolynomial::one();
        for i in 0..k {
            acc = acc.mul(&t.sub(&SymPolynomial::constant(Rational::from_int(i as i64))));
        }
        acc
    };
    let mut lhs = SymPolynomial::zero();
    for j in 0..=n {
        let term = falling(n - j).mul(&center::shifted_elementary(n, j));
        lhs.add_scaled(&term, &Rational::sign((n - j) as usize));
    }
    let mut rhs = SymPolynomial::one();
    for i in 1..=n {
        rhs = rhs.mul(&SymPolynomial::var_plus(X(i), n as i64 - i as i64).sub(&t));
    }
    (lhs, rhs)
}

/// A named central element together with its expected Harish-Chandra image.
pub fn harish_chandra_catalog(n: u32, max_index: u32) -> Result<Vec<(String, UeaElement, SymPolynomial)>, SuiteError> {
    let mut out = Vec::new();
    for r in 1..=n.min(max_index) {
        out.push((format!("H[n={n},r={r}]"), center::capelli_generator(n, r)?, center::shifted_elementary(n, r)));
    }
    for r in 1..=max_index {
        out.push((format!("P[n={n},r={r}]"), center::permanental_generator(n, r)?, center::shifted_complete(n, r)));
    }
    for h in 1..=n.min(max_index) {
        out.push((format!("Cs[n={n},h={h}]"), center::c_coefficient(n, h)?, center::elementary_staircase(n, h)));
    }
    for p in 0..=max_index {
        out.push((format!("K[n={n},p={p}]"), center::deruyts(n, p)?, center::deruyts_image(n, p)));
    }
    for p in 0..=max_index {
        out.push((
            format!("C[n={n},p={p}]"),
            center::c_n(n, p)?,
            center::staircase_product(n, &Rational::from_int(p as i64)),
        ));
    }
    Ok(out)
}

fn plan_harish_chandra(cfg: &SuiteConfig) -> Result<Plan, SuiteError> {
    let n = cfg.n;
    let max_index = cfg.r.or(cfg.p).or(cfg.k).unwrap_or(3);
    let mut rng = cfg.rng(9);
    let weights: Vec<Weight> = (0..5).map(|_| Weight::random(&mut rng, n as usize, 3)).collect();
    let mut plan = Plan::new();
    for (name, u, expected) in harish_chandra_catalog(n, max_index)? {
        let (u2, e2) = (u.clone(), expected.clone());
        plan.add(format!("chi_{name}"), move || {
            Ok((e2.to_string(), center::harish_chandra(&u2, n)?.to_string()))
        });
        let e3 = expected.clone();
        plan.add(format!("shifted_symmetric_{name}"), move || {
            Ok(("shifted symmetric".into(), yes(center::is_shifted_symmetric(&e3, n), "shifted symmetric", "not shifted symmetric")))
        });
        let ws = weights.clone();
        plan.add(format!("eigenvalue_{name}"), move || {
            let chi = center::cartan_projection(&u);
            let mut exp = Vec::new();
            let mut act = Vec::new();
            for w in &ws {
                exp.push(chi.eval_at(&w.as_point()).to_string());
                act.push(center::eigenvalue_on_highest_weight(&u, w)?.to_string());
            }
            Ok((exp.join(","), act.join(",")))
        });
    }
    for (a, b) in [(1u32, 1u32), (1, 2), (2, 2)] {
        if b > n {
            continue;
        }
        plan.add(format!("chi_multiplicative[n={n},H{a}*H{b}]"), move || {
            let (u, v) = (center::capelli_generator(n, a)?, center::capelli_generator(n, b)?);
            let lhs = center::harish_chandra(&u.mul(&v), n)?;
            let rhs = center::harish_chandra(&u, n)?.mul(&center::harish_chandra(&v, n)?);
            Ok((rhs.to_string(), lhs.to_string()))
        });
    }
    for p in 0..=max_index {
        let ws = weights.clone();
        plan.add(format!("hook_coefficient[n={n},p={p}]"), move || {
            let k = center::deruyts(n, p)?;
            let mut exp = Vec::new();
            let mut act = Vec::new();
            for w in &ws {
                exp.push(center::hook_eigenvalue(n, p, w).to_string());
                act.push(center::eigenvalue_on_highest_weight(&k, w)?.to_string());
            }
            Ok((exp.join(","), act.join(",")))
        });
    }
    Ok(plan)
}

fn shifted_matrix(idx: &[u32], shifts: &[i64]) -> NcMatrix {
    NcMatrix::from_fn(idx.len(), |a, b| {
        let e = UeaElement::e(idx[a], idx[b]);
        if a == b {
            e.add(&UeaElement::scalar(Rational::from_int(shifts[a])))
        } else {
            e
        }
    })
}

fn plan_golden() -> Result<Plan, SuiteError> {
    let mut plan = Plan::new();
    plan.add("gl2_column_bitableau".into(), || {
        let bt = BiTableau::from_rows(vec![vec![1], vec![2]], vec![vec![2], vec![1]])?;
        let expected = UeaElement::e(1, 2).mul(&UeaElement::e(2, 1)).neg().add(&UeaElement::e(1, 1));
        Ok((expected.to_string(), capelli_det_bitableau(&bt, 2)?.to_string()))
    });
    plan.add("column_permanent_3x3".into(), || {
        let bt = BiTableau::from_rows(vec![vec![3, 2, 1]], vec![vec![1, 2, 3]])?;
        Ok((cper(&shifted_matrix(&[1, 2, 3], &[-2, -1, 0])).to_string(), capelli_per_bitableau(&bt, 3)?.to_string()))
    });
    for k in 1..=3u32 {
        plan.add(format!("capelli_row_cdet[k={k}]"), move || {
            let t: Vec<u32> = (1..=k).collect();
            let s: Vec<u32> = t.iter().rev().copied().collect();
            let shifts: Vec<i64> = (0..k as i64).map(|a| k as i64 - 1 - a).collect();
            let bt = BiTableau::from_rows(vec![s], vec![t.clone()])?;
            Ok((cdet(&shifted_matrix(&t, &shifts)).to_string(), capelli_det_bitableau(&bt, k)?.to_string()))
        });
    }
    plan.add("deruyts_K1_2".into(), || {
        let e = UeaElement::e(1, 1);
        let expected = e.mul(&e.sub(&UeaElement::one())).neg();
        Ok((expected.to_string(), center::deruyts(1, 2)?.to_string()))
    });
    plan.add("chi_H2_2".into(), || {
        let expected = SymPolynomial::var_plus(X(1), 1).mul(&x(2));
        Ok((expected.to_string(), center::harish_chandra(&center::capelli_generator(2, 2)?, 2)?.to_string()))
    });
    Ok(plan)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(n: u32) -> SuiteConfig {
        SuiteConfig { n, samples: 4, timing: false, ..SuiteConfig::default() }
    }

    #[test]
    fn suite_names_roundtrip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!("capelli-identity".parse::<Suite>().unwrap(), Suite::Capelli);
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        for s in [Suite::Capelli, Suite::VirtualWord, Suite::Expansion, Suite::Golden, Suite::Centrality] {
            let r = run_suite(s, &cfg(2)).unwrap();
            assert!(r.pass, "{}", r.to_text());
        }
    }

    #[test]
    fn reports_are_sorted_and_deterministic() {
        let a = run_suite(Suite::Epimorphism, &cfg(2)).unwrap();
        let b = run_suite(Suite::Epimorphism, &cfg(2)).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert!(a.checks.windows(2).all(|w| w[0].name <= w[1].name));
    }

    #[test]
    fn invalid_config_rejected() {
        let bad = SuiteConfig { n: 0, ..SuiteConfig::default() };
        assert!(matches!(run_suite(Suite::Golden, &bad), Err(SuiteError::InvalidConfig(_))));
    }

    #[test]
    fn printed_stirling_relation_is_reported_as_failing() {
        let r = run_suite(Suite::Generating, &cfg(2)).unwrap();
        let failing: Vec<&str> = r.checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect();
        assert_eq!(failing, ["stirling_relation[n=2,h=0]", "stirling_relation[n=2,h=1]"]);
    }
}
