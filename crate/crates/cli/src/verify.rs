//! The `verify-paper` suite: every number and constructive step the
//! two-component argument rests on, recomputed and compared exactly.
//!
//! Items are grouped; each group draws from its own seeded generator so the
//! report does not depend on scheduling. Items are sorted by id.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use hilb4n_core::borel::{catalog, enumerate_borel_ideals};
use hilb4n_core::degeneration::{family_limit, family_limit_detailed, rs_degeneration, specialize, va_degeneration, weight_limit, LimitPoint, RsCase};
use hilb4n_core::gin::generic_initial_ideal;
use hilb4n_core::hilbert::{gotzmann_number, hilbert_function, hilbert_values, macaulay_min_growth, quotient_hilbert_polynomial, regularity, HilbertPolynomial};
use hilb4n_core::ideal::{saturate_irrelevant, Ideal};
use hilb4n_core::monomial::count_of_degree;
use hilb4n_core::scalar;
use hilb4n_core::strata::{classify, dimension_table, sample_shape_with, sample_stratum, R5Case, Stratum, StratumShape, SAMPLE_BOUND};
use hilb4n_core::tangent::tangent_dimension;
use hilb4n_core::{LinearChange, Monomial, MonomialOrder, Polynomial};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::parse::{format_hilbert_polynomial, parse_ideal, ParseOptions};

pub const DEFAULT_SEED: u64 = 20_240_404;

pub const GROUPS: [&str; 9] = ["borel", "hilbert", "strata", "macaulay", "gin", "dims", "tangent", "degeneration", "properties"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct Item {
    pub id: String,
    pub criterion: u8,
    pub description: String,
    pub paper_anchor: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub items: Vec<Item>,
    pub timings: BTreeMap<String, Duration>,
}

impl Report {
    pub fn passed(&self) -> usize {
        self.items.iter().filter(|i| i.status == Status::Pass).count()
    }

    pub fn failed(&self) -> usize {
        self.items.len() - self.passed()
    }

    pub fn all_pass(&self) -> bool {
        self.failed() == 0
    }

    pub fn criterion(&self, k: u8) -> impl Iterator<Item = &Item> {
        self.items.iter().filter(move |i| i.criterion == k)
    }

    pub fn item(&self, id: &str) -> Option<&Item> {
        self.items.iter().find(|i| i.id == id)
    }

    /// The report as one JSON object; timings are optional so that runs
    /// with equal seeds compare byte for byte.
    pub fn to_json(&self, with_timings: bool) -> Value {
        let mut v = json!({
            "items": self.items,
            "summary": { "total": self.items.len(), "passed": self.passed(), "failed": self.failed() },
        });
        if with_timings {
            let t: BTreeMap<&String, f64> = self.timings.iter().map(|(k, d)| (k, d.as_secs_f64())).collect();
            v["timings"] = json!(t);
        }
        v
    }
}

/// Literal values the suite compares against.
#[derive(Clone, Debug)]
pub struct Expectations {
    /// Generators of the four Borel ideals, in ideal-file syntax.
    pub borel: [&'static str; 4],
    /// Ideal-side Hilbert function values as printed, from `n = 0`.
    pub phi: [&'static [u64]; 4],
    /// Common values `(n, Q(n))` of the four Hilbert functions.
    pub common_tail: [(i64, u64); 3],
    pub quotient_polynomial: &'static str,
    pub macaulay_growth: ((u64, u32, usize), u64),
    pub gotzmann_number: usize,
    pub r4_auxiliary_dimension: u64,
    pub r5_first_case_dimension: u64,
    pub dimensions: [(&'static str, i64); 8],
    pub tangent_lex_point: usize,
    pub tangent_ci: usize,
    pub tangent_lower_bounds: [usize; 3],
}

impl Default for Expectations {
    fn default() -> Self {
        Expectations {
            borel: ["x^2; x*y; y^3", "x^2; x*y; x*z^2; y^4", "x^2; x*y; x*z; y^5; y^4*z", "x; y^5; y^4*z^2"],
            phi: [&[0, 0, 2, 8, 19, 36, 60, 92], &[0, 0, 2, 8, 19, 36], &[0, 0, 3, 9, 19, 36], &[0, 1, 4, 10, 20, 36]],
            common_tail: [(5, 36), (6, 60), (7, 92)],
            quotient_polynomial: "4*n",
            macaulay_growth: ((3, 1, 4), 9),
            gotzmann_number: 6,
            r4_auxiliary_dimension: 18,
            r5_first_case_dimension: 34,
            dimensions: [("V", 16), ("R3'", 15), ("R4", 23), ("R5", 22), ("R6", 21), ("H1", 19), ("Hq", 6), ("Z", 23)],
            tangent_lex_point: 23,
            tangent_ci: 16,
            tangent_lower_bounds: [16, 23, 23],
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Groups to run; empty runs all.
    pub only: Vec<String>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { seed: DEFAULT_SEED, only: Vec::new() }
    }
}

pub fn verify_paper(config: &VerifyConfig) -> Report {
    verify_paper_with(config, &Expectations::default())
}

pub fn verify_paper_with(config: &VerifyConfig, exp: &Expectations) -> Report {
    let selected: Vec<&str> = GROUPS.iter().copied().filter(|g| config.only.is_empty() || config.only.iter().any(|o| o == g)).collect();
    let results: Vec<(String, Vec<Item>, Duration)> = std::thread::scope(|s| {
        let handles: Vec<_> = selected
            .iter()
            .enumerate()
            .map(|(k, g)| {
                let seed = config.seed.wrapping_add(0x9e37_79b9_7f4a_7c15u64.wrapping_mul(k as u64 + 1));
                let g = g.to_string();
                s.spawn(move || {
                    let start = Instant::now();
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    let items = run_group(&g, &mut rng, exp);
                    (g, items, start.elapsed())
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("verification group panicked")).collect()
    });
    let mut items = Vec::new();
    let mut timings = BTreeMap::new();
    for (g, its, t) in results {
        items.extend(its);
        timings.insert(g, t);
    }
    items.sort_by(|a, b| a.id.cmp(&b.id));
    Report { items, timings }
}

pub fn is_group(name: &str) -> bool {
    GROUPS.contains(&name)
}

fn run_group(group: &str, rng: &mut ChaCha8Rng, exp: &Expectations) -> Vec<Item> {
    match group {
        "borel" => borel_items(exp),
        "hilbert" => hilbert_items(exp),
        "strata" => strata_items(rng, exp),
        "macaulay" => macaulay_items(exp),
        "gin" => gin_items(rng),
        "dims" => dims_items(exp),
        "tangent" => tangent_items(rng, exp),
        "degeneration" => degeneration_items(rng),
        "properties" => property_items(rng),
        _ => Vec::new(),
    }
}

fn item(id: &str, criterion: u8, description: &str, anchor: &str, expected: impl Into<String>, computed: impl Into<String>) -> Item {
    let (expected, computed) = (expected.into(), computed.into());
    let status = if expected == computed { Status::Pass } else { Status::Fail };
    Item { id: id.into(), criterion, description: description.into(), paper_anchor: anchor.into(), expected, computed, status, detail: None }
}

fn with_detail(mut i: Item, detail: impl Into<String>) -> Item {
    i.detail = Some(detail.into());
    i
}

/// Minimal generators of a monomial ideal, by degree then lex-descending.
pub fn canonical_monomials(i: &Ideal) -> String {
    let mut ms = i.monomial_generators().unwrap_or_default();
    ms.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| MonomialOrder::Lex.cmp(b, a)));
    let parts: Vec<String> = ms.iter().map(|m| m.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn literal_ideal(text: &str) -> Ideal {
    parse_ideal(text, ParseOptions::default()).expect("literal ideal").ideal()
}

fn tally(ok: usize, total: usize) -> String {
    format!("{ok}/{total}")
}

fn four_n() -> HilbertPolynomial {
    HilbertPolynomial::from_ints(&[0, 4])
}

// Ideal-side values beyond the printed range: once n is past the
// regularity the quotient has dimension 4n.
fn phi_extended(printed: &[u64], tail: &[(i64, u64)], upto: usize) -> Vec<u64> {
    let mut v: Vec<u64> = (0..=upto as u64).map(|n| count_of_degree(4, n as u32) - 4 * n).collect();
    v[..printed.len()].copy_from_slice(printed);
    for &(n, q) in tail {
        if (n as usize) <= upto && n as usize >= printed.len() {
            v[n as usize] = q;
        }
    }
    v
}

fn borel_items(exp: &Expectations) -> Vec<Item> {
    let anchor = "Borel-fixed ideals with Hilbert polynomial 4n";
    let start = Instant::now();
    let found = enumerate_borel_ideals(&four_n());
    let elapsed = start.elapsed();
    let mut out = Vec::new();
    let expected: Vec<String> = exp.borel.iter().map(|t| canonical_monomials(&literal_ideal(t))).collect();
    let computed = match &found {
        Ok(list) => list.iter().map(canonical_monomials).collect::<Vec<_>>().join(" | "),
        Err(e) => format!("error: {e}"),
    };
    out.push(item("c01.borel-enumeration", 1, "saturated Borel-fixed ideals with quotient polynomial 4n", anchor, expected.join(" | "), computed));
    let within = if elapsed < Duration::from_secs(60) { "under 60 s" } else { "over 60 s" };
    // the wall time itself goes to the group timing, keeping items reproducible
    out.push(item("c01.borel-runtime", 1, "enumeration runtime budget", anchor, "under 60 s", within));
    out
}

fn hilbert_items(exp: &Expectations) -> Vec<Item> {
    let mut out = Vec::new();
    let anchor_phi = "Hilbert functions of the four Borel ideals";
    let anchor_tail = "common values Q(5), Q(6), Q(7)";
    for (k, text) in exp.borel.iter().enumerate() {
        let name = format!("B{}", k + 3);
        let ideal = literal_ideal(text);
        let printed = exp.phi[k];
        let values = hilbert_values(&ideal, 7).map(|v| v[..printed.len()].to_vec());
        out.push(item(
            &format!("c02.hf-{name}"),
            2,
            &format!("ideal-side Hilbert function of {name}"),
            anchor_phi,
            format!("{printed:?}"),
            values.map(|v| format!("{v:?}")).unwrap_or_else(|e| format!("error: {e}")),
        ));
        let tail: Vec<String> = exp.common_tail.iter().map(|(n, q)| format!("Q({n})={q}")).collect();
        let got: Vec<String> = exp
            .common_tail
            .iter()
            .map(|(n, _)| format!("Q({n})={}", hilbert_function(&ideal, *n).map(|v| v.to_string()).unwrap_or_else(|e| e.to_string())))
            .collect();
        out.push(item(&format!("c02.tail-{name}"), 2, &format!("values at n = 5, 6, 7 for {name}"), anchor_tail, tail.join(" "), got.join(" ")));
        out.push(item(
            &format!("c02.regularity-{name}"),
            2,
            &format!("regularity of {name}"),
            "regularity of the Borel ideals",
            (k + 3).to_string(),
            regularity(&ideal).map(|r| r.to_string()).unwrap_or_else(|e| format!("error: {e}")),
        ));
        out.push(item(
            &format!("c03.polynomial-{name}"),
            3,
            &format!("quotient Hilbert polynomial of {name}"),
            "Hilbert polynomial of degree-4 genus-1 curves",
            exp.quotient_polynomial,
            quotient_hilbert_polynomial(&ideal).map(|p| format_hilbert_polynomial(&p)).unwrap_or_else(|e| format!("error: {e}")),
        ));
    }
    out
}

/// Samples a stratum, checking HF for `n ≤ 8` and regularity.
fn stratum_suite(
    rng: &mut ChaCha8Rng,
    label: Stratum,
    count: usize,
    phi: &[u64],
    mut extra: impl FnMut(&StratumShape, &Ideal) -> Option<bool>,
) -> (usize, usize, usize) {
    let (mut ok, mut extra_ok, mut extra_total) = (0, 0, 0);
    for _ in 0..count {
        let Ok((shape, i)) = sample_shape_with(label, rng, SAMPLE_BOUND) else { continue };
        let hf_ok = hilbert_values(&i, 8).map(|v| v == phi).unwrap_or(false);
        let reg_ok = regularity(&i).map(|r| r == label.regularity()).unwrap_or(false);
        if hf_ok && reg_ok {
            ok += 1;
        }
        if let Some(good) = extra(&shape, &i) {
            extra_total += 1;
            extra_ok += good as usize;
        }
    }
    (ok, extra_ok, extra_total)
}

fn strata_items(rng: &mut ChaCha8Rng, exp: &Expectations) -> Vec<Item> {
    let phi = |k: usize| phi_extended(exp.phi[k], &exp.common_tail, 8);
    let mut out = Vec::new();
    let contract = "Hilbert function and regularity of the stratum";
    for (label, count, crit, k) in [
        (Stratum::V, 100, 4, 0),
        (Stratum::R3Prime, 100, 4, 0),
        (Stratum::R4, 100, 5, 1),
        (Stratum::R5, 50, 6, 2),
        (Stratum::R6, 50, 6, 3),
    ] {
        let aux_dim = if label == Stratum::R4 { exp.r4_auxiliary_dimension } else { exp.r5_first_case_dimension };
        let (ok, aux_ok, aux_total) = stratum_suite(rng, label, count, &phi(k), |shape, _| match shape {
            StratumShape::R4(s) if label == Stratum::R4 => {
                let j = Ideal::new(4, vec![&s.ell * &s.ell1, &s.ell * &s.ell2, &s.ell * &s.q]);
                Some(hilbert_function(&j, 4).map(|v| v == aux_dim).unwrap_or(false))
            }
            StratumShape::R5(s) if s.case == R5Case::First => {
                let j = Ideal::new(4, s.l_space.iter().map(|l| &s.ell * l).collect());
                Some(hilbert_function(&j, 5).map(|v| v == aux_dim).unwrap_or(false))
            }
            _ => None,
        });
        let slug = label.to_string().replace('\'', "prime").to_lowercase();
        out.push(with_detail(
            item(
                &format!("c{crit:02}.samples-{slug}"),
                crit,
                &format!("{count} random {label} samples: Hilbert function for n ≤ 8 and regularity {}", label.regularity()),
                contract,
                tally(count, count),
                tally(ok, count),
            ),
            format!("expected Hilbert function {:?}", phi(k)),
        ));
        if label == Stratum::R4 {
            out.push(item("c05.auxiliary-r4", 5, "dim of ℓ(ℓ₁,ℓ₂,q) in degree 4 equals 18 for every sample", "degree-4 piece of the auxiliary ideal", tally(count, count), tally(aux_ok, aux_total)));
        }
        if label == Stratum::R5 {
            let computed = if aux_total == 0 { "no first-case samples".to_string() } else { tally(aux_ok, aux_total) };
            out.push(with_detail(
                item("c06.auxiliary-r5", 6, "dim (ℓL)₅ = 34 for first-case samples", "degree-5 piece of ℓL", tally(aux_total, aux_total), computed),
                format!("{aux_total} first-case samples"),
            ));
        }
    }
    out
}

fn macaulay_items(exp: &Expectations) -> Vec<Item> {
    let ((a, d, r), want) = exp.macaulay_growth;
    let growth = macaulay_min_growth(a, d, r).map(|v| v.to_string()).unwrap_or_else(|e| format!("error: {e}"));
    let gotz = gotzmann_number(&four_n()).map(|v| v.to_string()).unwrap_or_else(|e| format!("error: {e}"));
    let max_reg = enumerate_borel_ideals(&four_n())
        .map(|l| l.iter().filter_map(|i| i.monomial_generators()).map(|g| g.iter().map(Monomial::degree).max().unwrap_or(0)).max().unwrap_or(0).to_string())
        .unwrap_or_else(|e| format!("error: {e}"));
    vec![
        item("c07.macaulay-growth", 7, &format!("minimal growth of a {a}-dimensional space of degree-{d} forms in {r} variables"), "lex-segment growth bound", want.to_string(), growth),
        item("c07.gotzmann-number", 7, "Gotzmann number of 4n", "Gotzmann regularity bound", exp.gotzmann_number.to_string(), gotz),
        item("c07.gotzmann-attained", 7, "largest regularity among the Borel ideals equals the Gotzmann number", "Gotzmann regularity bound", exp.gotzmann_number.to_string(), max_reg),
    ]
}

fn gin_items(rng: &mut ChaCha8Rng) -> Vec<Item> {
    let cat = catalog();
    let mut out = Vec::new();
    for (label, k) in [(Stratum::V, 0), (Stratum::R3Prime, 0), (Stratum::R4, 1), (Stratum::R5, 2), (Stratum::R6, 3)] {
        let mut ok = 0;
        for _ in 0..25 {
            let Ok(i) = sample_stratum(label, rng) else { continue };
            if let Ok(g) = generic_initial_ideal(&i, rng) {
                ok += g.gin.equal(&cat[k].ideal) as usize;
            }
        }
        let slug = label.to_string().replace('\'', "prime").to_lowercase();
        out.push(item(
            &format!("c08.gin-{slug}"),
            8,
            &format!("generic initial ideal of 25 {label} samples is {}", cat[k].name),
            "generic initial ideals of the strata",
            tally(25, 25),
            tally(ok, 25),
        ));
    }
    out
}

fn dims_items(exp: &Expectations) -> Vec<Item> {
    let table = dimension_table();
    exp.dimensions
        .iter()
        .map(|(name, want)| {
            let entry = table.iter().find(|e| e.name == *name);
            let computed = entry.map_or("missing".to_string(), |e| e.value.to_string());
            let slug = name.replace('\'', "prime").to_lowercase();
            let it = item(&format!("c09.dim-{slug}"), 9, &format!("dimension of {name}"), "dimension counts of the strata", want.to_string(), computed);
            match entry {
                Some(e) => with_detail(it, e.derivation()),
                None => it,
            }
        })
        .collect()
}

fn tangent_items(rng: &mut ChaCha8Rng, exp: &Expectations) -> Vec<Item> {
    let cat = catalog();
    let dim = |i: &Ideal| tangent_dimension(i).map(|r| r.dimension);
    let mut out = vec![item(
        "c10.tangent-b6",
        10,
        "tangent space dimension at the lexicographic point B6",
        "smoothness of the lexicographic point",
        exp.tangent_lex_point.to_string(),
        dim(&cat[3].ideal).map(|d| d.to_string()).unwrap_or_else(|e| format!("error: {e}")),
    )];
    let mut ok = 0;
    let mut seen = Vec::new();
    for _ in 0..10 {
        if let Ok(d) = sample_stratum(Stratum::V, rng).and_then(|i| dim(&i)) {
            ok += (d == exp.tangent_ci) as usize;
            seen.push(d);
        }
    }
    out.push(with_detail(
        item("c10.tangent-ci", 10, &format!("tangent dimension {} at 10 random complete intersections", exp.tangent_ci), "smoothness of the complete-intersection component", tally(10, 10), tally(ok, 10)),
        format!("{seen:?}"),
    ));
    for (k, bound) in exp.tangent_lower_bounds.iter().enumerate() {
        let e = &cat[k];
        let got = dim(&e.ideal);
        let computed = match &got {
            Ok(d) if d >= bound => format!("at least {bound}"),
            Ok(d) => format!("{d}"),
            Err(err) => format!("error: {err}"),
        };
        let it = item(
            &format!("c10.tangent-{}", e.name.to_lowercase()),
            10,
            &format!("tangent dimension at {} is bounded below by the component through it", e.name),
            "component dimensions through the Borel points",
            format!("at least {bound}"),
            computed,
        );
        out.push(match got {
            Ok(d) => with_detail(it, format!("computed {d}")),
            Err(_) => it,
        });
    }
    out
}

fn degeneration_items(rng: &mut ChaCha8Rng) -> Vec<Item> {
    let mut out = Vec::new();
    // VA round trip and finiteness of the bad parameter set
    let (mut round, mut fibres) = (0, 0);
    for _ in 0..25 {
        let Ok(i) = sample_stratum(Stratum::R3Prime, rng) else { continue };
        let Ok(va) = va_degeneration(&i) else { continue };
        if family_limit(&va.family, LimitPoint::Zero).map(|l| l.equal(&i)).unwrap_or(false) {
            round += 1;
        }
        let good = (0..3).all(|_| {
            let a = scalar::int(rng.gen_range(1..=50) * if rng.gen() { 1 } else { -1 });
            specialize(&va.family, &a)
                .and_then(|f| saturate_irrelevant(&f))
                .and_then(|f| classify(&f))
                .map(|r| r.stratum == Stratum::V)
                .unwrap_or(false)
        });
        fibres += good as usize;
    }
    let anchor_va = "R3' curves as limits of complete intersections";
    out.push(item("c11.va-round-trip", 11, "limit at 0 of the complete-intersection family equals the R3' sample (25 samples)", anchor_va, tally(25, 25), tally(round, 25)));
    out.push(item("c11.va-fibres", 11, "three sampled fibres per family are complete intersections", anchor_va, tally(25, 25), tally(fibres, 25)));

    let x = Polynomial::var(0, 4);
    let t4 = Polynomial::var(3, 4).pow(4);
    let marker = Ideal::new(4, vec![&x * &x, &x * &Polynomial::var(1, 4), &x * &Polynomial::var(2, 4), &x * &t4]);
    let (mut terminal, mut linear, mut term_total, mut term_ok) = (0, 0, 0, 0);
    let mut cases: Vec<RsCase> = Vec::new();
    for _ in 0..25 {
        let Ok(i) = sample_stratum(Stratum::R5, rng) else { continue };
        let Ok(chain) = rs_degeneration(&i) else { continue };
        cases.push(chain.case);
        if classify(&chain.terminal).map(|r| r.stratum == Stratum::R6).unwrap_or(false) {
            terminal += 1;
        }
        if !chain.terminal.basis_in_degree(1).is_empty() {
            linear += 1;
        }
        if chain.case == RsCase::SecondWithTerm {
            term_total += 1;
            let step = &chain.steps[0];
            if family_limit_detailed(&step.family, step.at).map(|d| d.specialized.contains_ideal(&marker)).unwrap_or(false) {
                term_ok += 1;
            }
        }
    }
    let anchor_rs = "R5 curves degenerate into R6";
    out.push(item("c12.rs-terminal", 12, "degeneration chains of 25 R5 samples end in R6", anchor_rs, tally(25, 25), tally(terminal, 25)));
    out.push(item("c12.rs-linear-form", 12, "the saturated limit contains a linear form", anchor_rs, tally(25, 25), tally(linear, 25)));
    out.push(with_detail(
        item("c12.rs-unsaturated-limit", 12, "with the t⁴ term present, the limit before saturation contains x(x,y,z,t⁴)", anchor_rs, tally(term_total, term_total), tally(term_ok, term_total)),
        format!("{term_total} samples with the term"),
    ));
    let distinct = [RsCase::First, RsCase::SecondWithTerm, RsCase::SecondWithoutTerm].iter().filter(|c| cases.contains(c)).count();
    out.push(with_detail(
        item("c12.rs-mixed-cases", 12, "both R5 cases occur among the samples", anchor_rs, "mixed", if distinct >= 2 && term_total > 0 { "mixed" } else { "single case" }),
        format!(
            "first {}, with term {}, without term {}",
            cases.iter().filter(|c| **c == RsCase::First).count(),
            term_total,
            cases.iter().filter(|c| **c == RsCase::SecondWithoutTerm).count()
        ),
    ));
    out
}

fn random_form(rng: &mut ChaCha8Rng, d: u32) -> Polynomial {
    let monos = Monomial::all_of_degree(4, d);
    let k = rng.gen_range(1..=3);
    let terms = (0..k).map(|_| (*monos.choose(rng).unwrap(), scalar::int(rng.gen_range(-3..=3)))).collect();
    Polynomial::from_terms(4, terms)
}

fn random_ideal(rng: &mut ChaCha8Rng) -> Ideal {
    loop {
        let k = rng.gen_range(2..=3);
        let gens: Vec<Polynomial> = (0..k)
            .map(|_| {
                let d = rng.gen_range(1..=3);
                random_form(rng, d)
            })
            .filter(|g| !g.is_zero())
            .collect();
        if !gens.is_empty() {
            return Ideal::new(4, gens);
        }
    }
}

fn property_items(rng: &mut ChaCha8Rng) -> Vec<Item> {
    const N: usize = 50;
    let orders = [
        MonomialOrder::DegRevLex,
        MonomialOrder::Lex,
        MonomialOrder::Weight { weights: vec![3, 1, 2, 1], tiebreak: Box::new(MonomialOrder::DegRevLex) },
    ];
    let anchor = "soundness of the exact engine";
    let (mut macaulay, mut determinism, mut idempotent, mut semicont, mut gin_agree) = (0, 0, 0, 0, 0);
    for _ in 0..N {
        let i = random_ideal(rng);
        macaulay += orders.iter().all(|o| {
            let init = i.initial_ideal(o);
            (0..=10).all(|n| hilbert_function(&init, n).ok() == hilbert_function(&i, n).ok())
        }) as usize;

        let mut gens = i.gens().to_vec();
        gens.shuffle(rng);
        let permuted = Ideal::new(4, gens);
        determinism += orders.iter().all(|o| *i.groebner_basis(o) == *permuted.groebner_basis(o)) as usize;

        idempotent += saturate_irrelevant(&i)
            .and_then(|s| saturate_irrelevant(&s).map(|t| t.equal(&s)))
            .unwrap_or(false) as usize;

        let (a, b) = (rng.gen::<u64>(), rng.gen::<u64>());
        let first = generic_initial_ideal(&i, &mut ChaCha8Rng::seed_from_u64(a));
        let second = generic_initial_ideal(&i, &mut ChaCha8Rng::seed_from_u64(b));
        gin_agree += matches!((first, second), (Ok(f), Ok(s)) if f.gin.equal(&s.gin)) as usize;
    }
    let mut semicont_failure = None;
    for k in 0..N {
        let label = [Stratum::V, Stratum::R3Prime, Stratum::R4][k % 3];
        let Ok(i) = sample_stratum(label, rng) else { continue };
        let moved = LinearChange::random(rng, 4, 1);
        let Ok(i) = i.apply_change(&moved) else { continue };
        let w: Vec<i64> = loop {
            let w: Vec<i64> = (0..4).map(|_| rng.gen_range(0..=3)).collect();
            if w.iter().any(|&c| c != w[0]) {
                break w;
            }
        };
        let ok = weight_limit(&i, &w, LimitPoint::Zero).and_then(|l| {
            let (gl, gi) = (hilbert_values(&l, 8)?, hilbert_values(&i, 8)?);
            Ok(gl.iter().zip(&gi).all(|(a, b)| a >= b) && quotient_hilbert_polynomial(&l)? == four_n())
        });
        match ok {
            Ok(true) => semicont += 1,
            Ok(false) => _ = semicont_failure.get_or_insert_with(|| format!("{label} sample, weights {w:?}: Hilbert function dropped")),
            Err(e) => _ = semicont_failure.get_or_insert_with(|| format!("{label} sample, weights {w:?}: {e}")),
        }
    }
    let total = tally(N, N);
    vec![
        item("c13.initial-ideal-hf", 13, "initial ideals under three orders share the Hilbert function for n ≤ 10", anchor, total.clone(), tally(macaulay, N)),
        item("c13.groebner-determinism", 13, "reduced Gröbner bases do not depend on generator order", anchor, total.clone(), tally(determinism, N)),
        item("c13.saturation-idempotent", 13, "saturating twice changes nothing", anchor, total.clone(), tally(idempotent, N)),
        {
            let it = item("c13.limit-semicontinuity", 13, "weight limits are flat and raise the Hilbert function", anchor, total.clone(), tally(semicont, N));
            match semicont_failure {
                Some(why) => with_detail(it, why),
                None => it,
            }
        },
        item("c13.gin-agreement", 13, "two independent generic initial ideal runs agree", anchor, total, tally(gin_agree, N)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corrupted_table_fails_with_anchor() {
        let mut exp = Expectations::default();
        exp.phi[1] = &[0, 0, 2, 8, 20, 36];
        let r = verify_paper_with(&VerifyConfig { only: vec!["hilbert".into()], ..Default::default() }, &exp);
        let bad: Vec<&Item> = r.items.iter().filter(|i| i.status == Status::Fail).collect();
        assert_eq!(bad.len(), 1);
        assert_eq!(bad[0].id, "c02.hf-B4");
        assert_eq!(bad[0].paper_anchor, "Hilbert functions of the four Borel ideals");
    }

    #[test]
    fn filtering_by_group() {
        let r = verify_paper(&VerifyConfig { only: vec!["dims".into(), "macaulay".into()], ..Default::default() });
        assert!(r.all_pass());
        assert!(r.items.iter().all(|i| i.criterion == 7 || i.criterion == 9));
        assert_eq!(r.timings.len(), 2);
    }

    #[test]
    fn extended_tables() {
        let e = Expectations::default();
        assert_eq!(phi_extended(e.phi[3], &e.common_tail, 8), vec![0, 1, 4, 10, 20, 36, 60, 92, 133]);
    }
}
