//! Named verification suites over exhaustively enumerated small bases.
//!
//! Each suite is a list of checks; a check counts the cases it ran and the
//! cases that failed, keeping a few failing cases as text.

use std::fmt::Debug;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::coeff::{int, rational, Coefficient, QParam, Rational};
use crate::dual::{blacktriangle, blacktriangle_counit, blacktriangle_element, count_c_and_d, pairing, pairing2, star_basis};
use crate::enumerate::{feynman_graphs_up_to, posets, posets_up_to, quasi_posets_up_to, simple_digraphs_up_to, Bounds};
use crate::error::{Error, Result};
use crate::fg::{self, fg_algebra, ncfg_algebra};
use crate::graph::FeynmanGraph;
use crate::hopf::{Family, Hopf, Tensor2};
use crate::lincomb::{map_tensor2, tensor, LinComb};
use crate::qp::{morphism_p, poset_algebra, project_posets, qp_algebra, QpElement};
use crate::realization::oracle::{self, generators, random_element, Realizer, Triple};
use crate::realization::{realize, realize_quasi_poset, realize_simple, Alphabet, AlphabetAlgebra};
use crate::sg::{self, morphism_s, ncsg_algebra, sg_algebra};

/// Bounds shared by the suites.
#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub max_vertices: usize,
    pub max_edges: usize,
    pub max_ext: u32,
    /// Alphabet size for the oracle suites.
    pub alphabet: usize,
    /// Ordered (labeled) modes to run: `false`, `true` or both.
    pub modes: Vec<bool>,
    /// Random elements for the alphabet diagrams.
    pub random_elements: usize,
    pub seed: u64,
    /// Poset size bound for the duality suites; `None` uses 5 for duality
    /// and 4 for the adjunction.
    pub max_size: Option<usize>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_vertices: 3,
            max_edges: 3,
            max_ext: 1,
            alphabet: 6,
            modes: vec![false, true],
            random_elements: 100,
            seed: 2024,
            max_size: None,
        }
    }
}

const KEPT_FAILURES: usize = 5;

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub cases: u64,
    pub failures: u64,
    pub examples: Vec<String>,
    pub millis: u128,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Outcome of a suite.
#[derive(Clone, Debug)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<CheckResult>,
}

impl Report {
    fn new(suite: &str) -> Self {
        Report { suite: suite.into(), checks: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn cases(&self) -> u64 {
        self.checks.iter().map(|c| c.cases).sum()
    }

    pub fn failures(&self) -> u64 {
        self.checks.iter().map(|c| c.failures).sum()
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn merge(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    /// JSON report; timings are left out unless asked for, so that repeated
    /// runs print identical bytes.
    pub fn to_json(&self, timings: bool) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                let mut v = json!({
                    "cases": c.cases,
                    "failed": c.failures,
                    "failing_cases": c.examples,
                    "name": c.name,
                    "passed": c.passed(),
                });
                if timings {
                    v["millis"] = json!(c.millis as u64);
                }
                v
            })
            .collect();
        json!({
            "cases": self.cases(),
            "checks": checks,
            "failed": self.failures(),
            "passed": self.passed(),
            "suite": self.suite,
        })
    }
}

struct Check<'a> {
    report: &'a mut Report,
    result: CheckResult,
    start: Instant,
}

impl<'a> Check<'a> {
    fn start(report: &'a mut Report, name: impl Into<String>) -> Self {
        Check {
            report,
            result: CheckResult { name: name.into(), cases: 0, failures: 0, examples: Vec::new(), millis: 0 },
            start: Instant::now(),
        }
    }

    fn case(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.result.cases += 1;
        if !ok {
            self.result.failures += 1;
            if self.result.examples.len() < KEPT_FAILURES {
                self.result.examples.push(describe());
            }
        }
    }

    fn result_case<T: Debug>(&mut self, r: Result<bool>, describe: impl FnOnce() -> T) {
        match r {
            Ok(ok) => self.case(ok, || format!("{:?}", describe())),
            Err(e) => self.case(false, || format!("{:?}: error {e}", describe())),
        }
    }

    fn finish(mut self) {
        self.result.millis = self.start.elapsed().as_millis();
        self.report.checks.push(self.result);
    }
}

fn mode_name(ordered: bool) -> &'static str {
    if ordered {
        "ordered"
    } else {
        "unordered"
    }
}

/// Coassociativity, compatibility on pairs whose sizes add up to at most
/// `pair_size`, counit and unit laws, and the antipode identity.
fn hopf_axioms<F: Family>(
    report: &mut Report,
    label: &str,
    alg: &Hopf<F>,
    basis: &[F::Obj],
    pair_ok: impl Fn(&F::Obj, &F::Obj) -> bool,
    only_coassociativity: bool,
) {
    let mut c = Check::start(report, format!("{label}/coassociativity"));
    for o in basis {
        c.case(alg.is_coassociative_on(&LinComb::basis(o.clone())), || format!("{o:?}"));
    }
    c.finish();
    if only_coassociativity {
        return;
    }
    let mut c = Check::start(report, format!("{label}/compatibility"));
    for a in basis {
        for b in basis {
            if pair_ok(a, b) {
                let (x, y) = (LinComb::basis(a.clone()), LinComb::basis(b.clone()));
                c.case(alg.is_compatible_on(&x, &y), || format!("{a:?} , {b:?}"));
            }
        }
    }
    c.finish();
    let mut c = Check::start(report, format!("{label}/counit"));
    c.case(alg.unit_coproduct_is_trivial(), || "unit".into());
    for o in basis {
        c.case(alg.counit_laws_hold_on(&LinComb::basis(o.clone())), || format!("{o:?}"));
    }
    c.finish();
    let mut c = Check::start(report, format!("{label}/antipode"));
    for o in basis {
        c.case(alg.antipode_law_holds_on(&LinComb::basis(o.clone())), || format!("{o:?}"));
    }
    c.finish();
}

fn fg_basis(cfg: &VerifyConfig, ordered: bool) -> Vec<FeynmanGraph> {
    feynman_graphs_up_to(cfg.max_vertices, Bounds { max_edges: cfg.max_edges, max_ext: cfg.max_ext }, ordered)
}

fn fg_pair_ok(cfg: &VerifyConfig) -> impl Fn(&FeynmanGraph, &FeynmanGraph) -> bool + '_ {
    move |a, b| {
        a.n() + b.n() <= cfg.max_vertices
            && (a.internal_edge_count() + b.internal_edge_count()) as usize <= cfg.max_edges
    }
}

fn suite_hopf_fg(cfg: &VerifyConfig, only_coassociativity: bool) -> Report {
    let mut r = Report::new(if only_coassociativity { "coassoc-fg" } else { "hopf-fg" });
    for &ordered in &cfg.modes {
        let alg = fg_algebra(ordered, QParam::Formal);
        let basis = fg_basis(cfg, ordered);
        hopf_axioms(&mut r, &format!("fg/{}", mode_name(ordered)), &alg, &basis, fg_pair_ok(cfg), only_coassociativity);
    }
    r
}

fn suite_hopf_sg(cfg: &VerifyConfig) -> Report {
    let mut r = Report::new("hopf-sg");
    for &ordered in &cfg.modes {
        let alg = sg_algebra(ordered, QParam::Formal);
        let basis = simple_digraphs_up_to(cfg.max_vertices, cfg.max_edges, ordered);
        let pair_ok = |a: &crate::SimpleDigraph, b: &crate::SimpleDigraph| {
            a.n() + b.n() <= cfg.max_vertices && a.edge_count() + b.edge_count() <= cfg.max_edges
        };
        hopf_axioms(&mut r, &format!("sg/{}", mode_name(ordered)), &alg, &basis, pair_ok, false);
    }
    r
}

fn suite_hopf_qp(cfg: &VerifyConfig, posets_only: bool) -> Report {
    let mut r = Report::new(if posets_only { "hopf-posets" } else { "hopf-qp" });
    for &ordered in &cfg.modes {
        let (alg, basis, label) = if posets_only {
            (poset_algebra(ordered, QParam::Formal), posets_up_to(cfg.max_vertices, ordered), "posets")
        } else {
            (qp_algebra(ordered, QParam::Formal), quasi_posets_up_to(cfg.max_vertices, ordered), "qp")
        };
        let pair_ok = |a: &crate::qp::QuasiPoset, b: &crate::qp::QuasiPoset| a.n() + b.n() <= cfg.max_vertices;
        hopf_axioms(&mut r, &format!("{label}/{}", mode_name(ordered)), &alg, &basis, pair_ok, false);
    }
    r
}

/// The cointeraction identity at `(0,0)` and `(q,1)` in the unordered mode,
/// and `ρ_{0,0} = δ` in every mode.
fn suite_cointeraction(cfg: &VerifyConfig) -> Report {
    let mut r = Report::new("cointeraction-fg");
    if cfg.modes.contains(&false) {
        let alg = fg_algebra(false, QParam::Formal);
        let basis = fg_basis(cfg, false);
        for (name, q1, q2) in [("(0,0)", QParam::zero(), QParam::zero()), ("(q,1)", QParam::Formal, QParam::one())] {
            let mut c = Check::start(&mut r, format!("fg/unordered/cointeraction {name}"));
            for g in &basis {
                c.result_case(alg.cointeraction_holds_on(&LinComb::basis(g.clone()), &q1, &q2), || g.clone());
            }
            c.finish();
        }
    }
    for &ordered in &cfg.modes {
        let alg = fg_algebra(ordered, QParam::Formal);
        let mut c = Check::start(&mut r, format!("fg/{}/rho00 = delta", mode_name(ordered)));
        for g in &fg_basis(cfg, ordered) {
            let a = LinComb::basis(g.clone());
            let ok = match (alg.coaction(&a, &QParam::zero(), &QParam::zero()), alg.internal_coproduct(&a)) {
                (Ok(x), Ok(y)) => Ok(x == y),
                (Err(e), _) | (_, Err(e)) => Err(e),
            };
            c.result_case(ok, || g.clone());
        }
        c.finish();
    }
    r
}

/// Coassociativity of `δ` and its counit laws.
fn suite_internal(cfg: &VerifyConfig) -> Report {
    let mut r = Report::new("internal-fg");
    for &ordered in &cfg.modes {
        let alg = fg_algebra(ordered, QParam::zero());
        let basis = fg_basis(cfg, ordered);
        let mut c = Check::start(&mut r, format!("fg/{}/delta coassociativity", mode_name(ordered)));
        for g in &basis {
            c.result_case(alg.internal_coassociative_on(&LinComb::basis(g.clone())), || g.clone());
        }
        c.finish();
        // On a graph with a directed cycle the discrete partition is never
        // compatible, so the right counit law cannot hold there; both domains
        // are reported.
        for (label, acyclic) in [("loop-free", false), ("acyclic", true)] {
            let mut c = Check::start(&mut r, format!("fg/{}/delta counit ({label})", mode_name(ordered)));
            for g in basis.iter().filter(|g| g.loop_count() == 0 && (!acyclic || !g.has_cycle())) {
                c.result_case(alg.internal_counit_laws_hold_on(&LinComb::basis(g.clone())), || g.clone());
            }
            c.finish();
        }
    }
    r
}

fn morphism_checks<A, B, FA, FB, M>(
    report: &mut Report,
    label: &str,
    src: &Hopf<FA>,
    dst: &Hopf<FB>,
    basis: &[A],
    pair_ok: impl Fn(&A, &A) -> bool,
    map: M,
) where
    A: Clone + Ord + std::hash::Hash + Debug,
    B: Clone + Ord + std::hash::Hash + Debug,
    FA: Family<Obj = A>,
    FB: Family<Obj = B>,
    M: Fn(&LinComb<A>) -> LinComb<B>,
{
    let mut c = Check::start(report, format!("{label}/product"));
    for a in basis {
        for b in basis {
            if pair_ok(a, b) {
                let (x, y) = (LinComb::basis(a.clone()), LinComb::basis(b.clone()));
                let ok = map(&src.product(&x, &y)) == dst.product(&map(&x), &map(&y));
                c.case(ok, || format!("{a:?} , {b:?}"));
            }
        }
    }
    c.finish();
    let mut c = Check::start(report, format!("{label}/coproduct"));
    for a in basis {
        let x = LinComb::basis(a.clone());
        let lhs = dst.coproduct(&map(&x));
        let rhs: Tensor2<B> = map_tensor2(
            &src.coproduct(&x),
            |l| map(&LinComb::basis(l.clone())),
            |r| map(&LinComb::basis(r.clone())),
        );
        c.case(lhs == rhs, || format!("{a:?}"));
    }
    c.finish();
}

/// The diagram `FG -S-> SG -P-> QP` over `NCFG -S-> NCSG -P-> P` with the
/// vertical projections `T`: every arrow is a bialgebra morphism and both
/// squares commute.
fn suite_morphisms(cfg: &VerifyConfig) -> Report {
    let mut r = Report::new("morphisms");
    for &ordered in &cfg.modes {
        let m = mode_name(ordered);
        let q = QParam::Formal;
        let (fga, ncfga) = (fg_algebra(ordered, q.clone()), ncfg_algebra(ordered, q.clone()));
        let (sga, ncsga) = (sg_algebra(ordered, q.clone()), ncsg_algebra(ordered, q.clone()));
        let (qpa, pa) = (qp_algebra(ordered, q.clone()), poset_algebra(ordered, q.clone()));
        let fgb = fg_basis(cfg, ordered);
        let sgb = simple_digraphs_up_to(cfg.max_vertices, cfg.max_edges, ordered);
        let fg_nc: Vec<FeynmanGraph> = fgb.iter().filter(|g| !g.has_cycle()).cloned().collect();
        let sg_nc: Vec<_> = sgb.iter().filter(|g| !g.has_cycle()).cloned().collect();
        let sg_pair = |a: &crate::SimpleDigraph, b: &crate::SimpleDigraph| {
            a.n() + b.n() <= cfg.max_vertices && a.edge_count() + b.edge_count() <= cfg.max_edges
        };

        morphism_checks(&mut r, &format!("S: fg -> sg/{m}"), &fga, &sga, &fgb, fg_pair_ok(cfg), morphism_s);
        morphism_checks(&mut r, &format!("P: sg -> qp/{m}"), &sga, &qpa, &sgb, sg_pair, morphism_p);
        morphism_checks(&mut r, &format!("T: fg -> ncfg/{m}"), &fga, &ncfga, &fgb, fg_pair_ok(cfg), fg::project_no_cycle);
        morphism_checks(&mut r, &format!("T: sg -> ncsg/{m}"), &sga, &ncsga, &sgb, sg_pair, sg::project_no_cycle);
        let qpb = quasi_posets_up_to(cfg.max_vertices, ordered);
        let qp_pair = |a: &crate::qp::QuasiPoset, b: &crate::qp::QuasiPoset| a.n() + b.n() <= cfg.max_vertices;
        morphism_checks(&mut r, &format!("T: qp -> posets/{m}"), &qpa, &pa, &qpb, qp_pair, project_posets);
        morphism_checks(&mut r, &format!("S: ncfg -> ncsg/{m}"), &ncfga, &ncsga, &fg_nc, fg_pair_ok(cfg), |a| {
            sg::project_no_cycle(&morphism_s(a))
        });
        morphism_checks(&mut r, &format!("P: ncsg -> posets/{m}"), &ncsga, &pa, &sg_nc, sg_pair, |a| {
            project_posets(&morphism_p(a))
        });

        let mut c = Check::start(&mut r, format!("square T∘S = S∘T/{m}"));
        for g in &fgb {
            let a = LinComb::basis(g.clone());
            c.case(sg::project_no_cycle(&morphism_s(&a)) == morphism_s(&fg::project_no_cycle(&a)), || format!("{g:?}"));
        }
        c.finish();
        let mut c = Check::start(&mut r, format!("square T∘P = P∘T/{m}"));
        for g in &sgb {
            let a = LinComb::basis(g.clone());
            c.case(project_posets(&morphism_p(&a)) == morphism_p(&sg::project_no_cycle(&a)), || format!("{g:?}"));
        }
        c.finish();
        let mut c = Check::start(&mut r, format!("outer rectangle/{m}"));
        for g in &fgb {
            let a = LinComb::basis(g.clone());
            let top = project_posets(&morphism_p(&morphism_s(&a)));
            let bottom = morphism_p(&sg::project_no_cycle(&morphism_s(&fg::project_no_cycle(&a))));
            c.case(top == bottom, || format!("{g:?}"));
        }
        c.finish();
    }
    r
}

fn basis_el(p: &crate::qp::QuasiPoset) -> QpElement {
    LinComb::basis(p.clone())
}

/// `⟨P⋆Q, R⟩ = ⟨P⊗Q, Δ(R)⟩` and `|C| = |D|` for `|P| + |Q| = |R| ≤ max_size`.
fn suite_duality(max_size: usize) -> Report {
    let mut r = Report::new("duality-posets");
    let alg = poset_algebra(false, QParam::zero());
    let by_size: Vec<_> = (0..=max_size).map(|n| posets(n, false)).collect();
    let mut dual = Check::start(&mut r, "star duality");
    let mut cd = Vec::new();
    for s in 0..=max_size {
        for a in 0..=s {
            for p in &by_size[a] {
                for q in &by_size[s - a] {
                    let st = star_basis(p, q);
                    let pq = LinComb::basis((p.clone(), q.clone()));
                    for z in &by_size[s] {
                        let ok = st.as_ref().map_err(Clone::clone).and_then(|st| {
                            Ok(pairing(st, &basis_el(z))? == pairing2(&pq, &alg.coproduct(&basis_el(z)))?)
                        });
                        dual.result_case(ok, || (p.clone(), q.clone(), z.clone()));
                        cd.push((p.clone(), q.clone(), z.clone()));
                    }
                }
            }
        }
    }
    dual.finish();
    let mut c = Check::start(&mut r, "C/D bijection counts");
    for (p, q, z) in &cd {
        let ok = count_c_and_d(p, q, z).map(|(x, y)| x == y);
        c.result_case(ok, || (p.clone(), q.clone(), z.clone()));
    }
    c.finish();
    r
}

/// `⟨x, y·_0 z⟩ = ⟨▲x, y⊗z⟩`, plus coassociativity and counit of `▲`.
fn suite_adjunction(max_size: usize) -> Report {
    let mut r = Report::new("adjunction-posets");
    let alg = poset_algebra(false, QParam::zero());
    let by_size: Vec<_> = (0..=max_size).map(|n| posets(n, false)).collect();
    let mut c = Check::start(&mut r, "pairing adjunction");
    for s in 0..=max_size {
        for a in 0..=s {
            for y in &by_size[a] {
                for z in &by_size[s - a] {
                    let yz = alg.product(&basis_el(y), &basis_el(z));
                    for x in &by_size[s] {
                        let ok = (|| Ok(pairing(&basis_el(x), &yz)? == pairing2(&blacktriangle(x), &LinComb::basis((y.clone(), z.clone())))?))();
                        c.result_case(ok, || (x.clone(), y.clone(), z.clone()));
                    }
                }
            }
        }
    }
    c.finish();
    let all: Vec<_> = by_size.iter().flatten().cloned().collect();
    let mut c = Check::start(&mut r, "Gram matrix is diagonal with entries s_P");
    for x in &all {
        for y in &all {
            let ok = pairing(&basis_el(x), &basis_el(y)).and_then(|v| {
                Ok(if x == y { v == Coefficient::from_int(crate::dual::automorphism_count(x)? as i64) } else { v.is_zero() })
            });
            c.result_case(ok, || (x.clone(), y.clone()));
        }
    }
    c.finish();
    let mut c = Check::start(&mut r, "blacktriangle coassociativity");
    for p in &all {
        let d = blacktriangle(p);
        let mut left = LinComb::zero();
        let mut right = LinComb::zero();
        for ((x, y), k) in &d {
            for ((u, v), ku) in &blacktriangle(x) {
                left.add_term((u.clone(), v.clone(), y.clone()), k * ku);
            }
            for ((u, v), ku) in &blacktriangle(y) {
                right.add_term((x.clone(), u.clone(), v.clone()), k * ku);
            }
        }
        c.case(left == right, || format!("{p:?}"));
    }
    c.finish();
    let mut c = Check::start(&mut r, "blacktriangle counit");
    for p in &all {
        let d = blacktriangle(p);
        let mut left = LinComb::zero();
        let mut right = LinComb::zero();
        for ((x, y), k) in &d {
            left.add_scaled(&basis_el(y), &(k * &blacktriangle_counit(&basis_el(x))));
            right.add_scaled(&basis_el(x), &(k * &blacktriangle_counit(&basis_el(y))));
        }
        c.case(left == basis_el(p) && right == basis_el(p), || format!("{p:?}"));
    }
    c.finish();
    // Pairs up to one vertex more than the adjunction range.
    let mut c = Check::start(&mut r, "blacktriangle(a star b) = blacktriangle(a) star blacktriangle(b)");
    let big: Vec<_> = (0..=max_size + 1).flat_map(|n| posets(n, false)).collect();
    for a in &big {
        for b in &big {
            if a.n() + b.n() > max_size + 1 {
                continue;
            }
            let ok = (|| {
                let lhs = blacktriangle_element(&star_basis(a, b)?);
                let mut rhs = LinComb::zero();
                for ((a1, a2), ca) in &blacktriangle(a) {
                    for ((b1, b2), cb) in &blacktriangle(b) {
                        let (s1, s2) = (star_basis(a1, b1)?, star_basis(a2, b2)?);
                        rhs.add_scaled(&tensor(&s1, &s2), &(ca * cb));
                    }
                }
                Ok(lhs == rhs)
            })();
            c.result_case(ok, || (a.clone(), b.clone()));
        }
    }
    c.finish();
    r
}

fn oracle_graphs(ordered: bool) -> Vec<FeynmanGraph> {
    feynman_graphs_up_to(2, Bounds { max_edges: 2, max_ext: 1 }, ordered)
}

pub fn oracle_q_values() -> Vec<Rational> {
    vec![int(0), int(1), int(2), rational(1, 2)]
}

/// Pairs `(q1, q2)` with `q1·q2` running over the oracle values.
pub fn oracle_q_pairs() -> Vec<(Rational, Rational)> {
    vec![(int(0), int(0)), (int(1), int(1)), (int(2), int(1)), (rational(1, 2), int(1))]
}

/// `Θ_X(G·_q H) = M_G(X)·M_H(X)` for graphs with at most two vertices and two
/// edges, at every oracle `q`, over `alphabet` equivalent letters.
fn suite_oracle_products(cfg: &VerifyConfig) -> Report {
    let mut r = Report::new("oracle-products");
    let qs = oracle_q_values();
    for &ordered in &cfg.modes {
        let gs = oracle_graphs(ordered);
        let mut real = Realizer::new(Alphabet::equivalent(cfg.alphabet));
        let mut c = Check::start(&mut r, format!("product/{}", mode_name(ordered)));
        for g in &gs {
            for h in &gs {
                c.result_case(real.check_product(g, h, &qs), || (g.clone(), h.clone()));
            }
        }
        c.finish();
    }
    r
}

/// The `Δ` and `δ` intertwining identities. `X ⊔ Y` and `XY` use alphabets
/// whose sizes multiply or add up to `alphabet`-scale letter sets.
fn suite_oracle_coproducts(cfg: &VerifyConfig) -> Report {
    let mut r = Report::new("oracle-coproducts");
    let half = (cfg.alphabet / 2).max(2);
    for &ordered in &cfg.modes {
        let gs = oracle_graphs(ordered);
        let mut c = Check::start(&mut r, format!("Delta/{}", mode_name(ordered)));
        let pairs = [
            (Alphabet::equivalent(half), Alphabet::equivalent(half)),
            (Alphabet::ordered(half), Alphabet::equivalent(half)),
            (Alphabet::equivalent(cfg.alphabet), Alphabet::ordered(cfg.alphabet)),
        ];
        for g in &gs {
            for (x, y) in &pairs {
                c.result_case(oracle::oracle_check_Delta(g, x, y), || (g.clone(), x.clone(), y.clone()));
            }
        }
        c.finish();
    }
    for &ordered in &cfg.modes {
        let gs = oracle_graphs(ordered);
        let mut c = Check::start(&mut r, format!("delta/{}", mode_name(ordered)));
        let pairs = [
            (Alphabet::equivalent(cfg.alphabet), Alphabet::equivalent(2)),
            (Alphabet::ordered(cfg.alphabet), Alphabet::equivalent(2)),
            (Alphabet::new(&[0, 0, 1]), Alphabet::new(&[0, 1])),
        ];
        let qpairs = if ordered { vec![(int(0), int(0))] } else { oracle_q_pairs() };
        for g in &gs {
            for (x, y) in &pairs {
                for (q1, q2) in &qpairs {
                    c.result_case(oracle::oracle_check_delta(g, x, y, q1, q2), || {
                        (g.clone(), x.clone(), y.clone(), q1.to_string(), q2.to_string())
                    });
                }
            }
        }
        c.finish();
    }
    r
}

/// Over an ordered alphabet the realization vanishes exactly on objects with
/// a cycle (graphs, simple graphs) or that are not posets (quasi-posets).
fn suite_no_cycle(cfg: &VerifyConfig) -> Report {
    let mut r = Report::new("no-cycle");
    let x = Alphabet::ordered(cfg.alphabet);
    for &ordered in &cfg.modes {
        let m = mode_name(ordered);
        let mut c = Check::start(&mut r, format!("fg/{m}"));
        for g in &fg_basis(cfg, ordered) {
            c.case(realize(g, &x).is_zero() == g.has_cycle(), || format!("{g:?}"));
        }
        c.finish();
        let mut c = Check::start(&mut r, format!("sg/{m}"));
        for g in &simple_digraphs_up_to(cfg.max_vertices, cfg.max_edges, ordered) {
            c.case(realize_simple(g, &x).is_zero() == g.has_cycle(), || format!("{g:?}"));
        }
        c.finish();
        let mut c = Check::start(&mut r, format!("qp/{m}"));
        for p in &quasi_posets_up_to(cfg.max_vertices, ordered) {
            c.case(realize_quasi_poset(p, &x).is_zero() == !p.is_poset(), || format!("{p:?}"));
        }
        c.finish();
    }
    r
}

fn small_alphabets() -> Vec<Alphabet> {
    vec![
        Alphabet::equivalent(1),
        Alphabet::equivalent(2),
        Alphabet::ordered(2),
        Alphabet::new(&[1, 0]),
    ]
}

/// The alphabet-level diagrams: coassociativity of the doubling and the
/// squaring morphisms, and the mixed doubling/squaring diagram, on every
/// generator for alphabets of size at most two and on random elements.
fn suite_alphabet_diagrams(cfg: &VerifyConfig) -> Report {
    let mut r = Report::new("alphabet-diagrams");
    let alphs = small_alphabets();
    let mut triples = Vec::new();
    for x in &alphs {
        for y in &alphs {
            for z in &alphs {
                triples.push(Triple { x: x.clone(), y: y.clone(), z: z.clone(), word: false });
            }
        }
    }
    let (q1, q2, q3) = (int(2), rational(1, 2), int(3));
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);

    let mut c = Check::start(&mut r, "doubling coassociativity");
    for t in &triples {
        let xyz = t.x.union(&t.y).union(&t.z);
        for g in generators(&xyz) {
            c.result_case(oracle::doubling_coassociative_on(&LinComb::basis(g.clone()), &t.x, &t.y), || g.clone());
        }
    }
    for k in 0..cfg.random_elements {
        let t = &triples[k % triples.len()];
        let alg = AlphabetAlgebra::new(t.x.union(&t.y).union(&t.z), QParam::value(int(2)), false);
        let a = random_element(&alg, 3, &mut rng);
        c.result_case(oracle::doubling_coassociative_on(&a, &t.x, &t.y), || a.clone());
    }
    c.finish();

    let mut c = Check::start(&mut r, "squaring coassociativity");
    for word in [false, true] {
        for t in &triples {
            let t = Triple { word, ..t.clone() };
            let xyz = t.x.product(&t.y).product(&t.z);
            for g in generators(&xyz) {
                c.result_case(t.squaring_coassociative_on(&LinComb::basis(g.clone()), [&q1, &q2, &q3]), || g.clone());
            }
        }
    }
    for k in 0..cfg.random_elements {
        let t = &triples[k % triples.len()];
        let alg = AlphabetAlgebra::new(t.x.product(&t.y).product(&t.z), QParam::value(&(&q1 * &q2) * &q3), false);
        let a = random_element(&alg, 3, &mut rng);
        c.result_case(t.squaring_coassociative_on(&a, [&q1, &q2, &q3]), || a.clone());
    }
    c.finish();

    let mut c = Check::start(&mut r, "doubling/squaring diagram");
    for t in &triples {
        let src = t.x.union(&t.y).product(&t.z);
        for g in generators(&src) {
            c.result_case(t.coaction_diagram_on(&LinComb::basis(g.clone()), &q1, &q2), || g.clone());
        }
    }
    for k in 0..cfg.random_elements {
        let t = &triples[k % triples.len()];
        let alg = AlphabetAlgebra::new(t.x.union(&t.y).product(&t.z), QParam::value(&q1 * &q2), false);
        let a = random_element(&alg, 3, &mut rng);
        c.result_case(t.coaction_diagram_on(&a, &q1, &q2), || a.clone());
    }
    c.finish();
    r
}

/// Suite names accepted by [`run_suite`].
pub const SUITES: &[&str] = &[
    "coassoc-fg",
    "hopf-fg",
    "hopf-sg",
    "hopf-qp",
    "hopf-posets",
    "cointeraction-fg",
    "internal-fg",
    "morphisms",
    "duality-posets",
    "adjunction-posets",
    "oracle-products",
    "oracle-coproducts",
    "no-cycle",
    "alphabet-diagrams",
];

/// Runs a suite by name; `all` runs every suite.
pub fn run_suite(name: &str, cfg: &VerifyConfig) -> Result<Report> {
    let dual_size = |default: usize| cfg.max_size.unwrap_or(default);
    Ok(match name {
        "coassoc-fg" => suite_hopf_fg(cfg, true),
        "hopf-fg" => suite_hopf_fg(cfg, false),
        "hopf-sg" => suite_hopf_sg(cfg),
        "hopf-qp" => suite_hopf_qp(cfg, false),
        "hopf-posets" => suite_hopf_qp(cfg, true),
        "cointeraction-fg" => suite_cointeraction(cfg),
        "internal-fg" => suite_internal(cfg),
        "morphisms" => suite_morphisms(cfg),
        "duality-posets" => suite_duality(dual_size(5)),
        "adjunction-posets" => suite_adjunction(dual_size(4)),
        "oracle-products" => suite_oracle_products(cfg),
        "oracle-coproducts" => suite_oracle_coproducts(cfg),
        "no-cycle" => suite_no_cycle(cfg),
        "alphabet-diagrams" => suite_alphabet_diagrams(cfg),
        "all" => {
            let mut r = Report::new("all");
            for s in SUITES.iter().filter(|s| **s != "coassoc-fg") {
                r.merge(run_suite(s, cfg)?);
            }
            r
        }
        other => return Err(Error::Unsupported(format!("unknown suite {other:?}; known: {}", SUITES.join(", ")))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyConfig {
        VerifyConfig { max_vertices: 2, max_edges: 1, alphabet: 4, random_elements: 5, ..Default::default() }
    }

    #[test]
    fn small_suites_pass() {
        for s in ["hopf-fg", "hopf-sg", "hopf-qp", "hopf-posets", "internal-fg", "morphisms", "no-cycle"] {
            let r = run_suite(s, &small()).unwrap();
            assert!(r.passed(), "{}", r.to_json(false));
            assert!(r.cases() > 0);
        }
    }

    #[test]
    fn report_json_is_stable() {
        let a = run_suite("coassoc-fg", &small()).unwrap().to_json(false).to_string();
        let b = run_suite("coassoc-fg", &small()).unwrap().to_json(false).to_string();
        assert_eq!(a, b);
        assert!(run_suite("nope", &small()).is_err());
    }
}
