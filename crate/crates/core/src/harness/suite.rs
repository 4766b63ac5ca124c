//! Verification suites: each draws instances satisfying a theorem's
//! hypothesis, runs the matching decision procedure and tallies outcomes.

use std::collections::HashSet;
use std::fmt;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::cert::Certificate;
use super::format::to_text;
use crate::census;
use crate::chordality::{every_contraction_simplicial, is_w_chordal, ChordalDecision};
use crate::complex::{independence_complex, ind_r_complex, SimplicialComplex};
use crate::conn::con_r;
use crate::constructions::{
    attach_star_cliques, clique_cycle_graph, clique_whisker, counterexample_gt, random_family,
    she_higher_family, t3_graph, whiskered, CliquePartition, FamilyKind,
};
use crate::error::{Error, Result};
use crate::graph::{Distance, Graph};
use crate::shelling::{brute_force_shellable, is_shellable, ShellDecision, BRUTE_FORCE_LIMIT};
use crate::vset::VertexSet;

/// w-chordality is cross-checked only up to this many vertices...
pub const CHORDAL_CHECK_MAX_N: usize = 7;
/// ...and up to this `r`.
pub const CHORDAL_CHECK_MAX_R: usize = 3;
/// Contraction-only checks run up to this many vertices.
pub const CONTRACTION_CHECK_MAX_N: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Expectation {
    AllShellable,
    AllWChordal,
    NotShellable,
    NotWChordal,
    /// Both routes to the facets of `ind_r(G)` agree.
    OracleEquality,
    /// The search engine agrees with brute force.
    EngineAgreement,
}

#[derive(Clone, Copy, Debug)]
pub struct TheoremSuite {
    pub id: &'static str,
    pub expectation: Expectation,
    pub description: &'static str,
}

const REGISTRY: &[TheoremSuite] = &[
    TheoremSuite {
        id: "con-ind",
        expectation: Expectation::OracleEquality,
        description: "ind_r(G) equals ind(con_r(G)): connected graphs n <= 5 and random graphs n <= 7, r = 1..4",
    },
    TheoremSuite {
        id: "not-chordal",
        expectation: Expectation::NotWChordal,
        description: "con_r(G_t) is not w-chordal for t >= r - 3",
    },
    TheoremSuite {
        id: "chordal-cond",
        expectation: Expectation::AllShellable,
        description: "every graph on 3 <= n <= 6 vertices, r in {n-2, n-1}",
    },
    TheoremSuite {
        id: "block-2",
        expectation: Expectation::AllShellable,
        description: "block graphs n <= 7, r = 2",
    },
    TheoremSuite {
        id: "block-diam",
        expectation: Expectation::AllShellable,
        description: "block graphs with diameter <= 4, r in {2, 3}",
    },
    TheoremSuite {
        id: "tree-diam",
        expectation: Expectation::AllShellable,
        description: "trees n <= 9 with diameter <= 5, r in {2, 3, 4}",
    },
    TheoremSuite {
        id: "tree-lower",
        expectation: Expectation::AllShellable,
        description: "forests n <= 9, r >= n - 5",
    },
    TheoremSuite {
        id: "block-3",
        expectation: Expectation::AllShellable,
        description: "T3-free block graphs n <= 9, r = 3",
    },
    TheoremSuite {
        id: "3-tree",
        expectation: Expectation::AllShellable,
        description: "forests n <= 8, r = 3",
    },
    TheoremSuite {
        id: "block-4",
        expectation: Expectation::AllShellable,
        description: "T2-graphs n <= 10, r = 4",
    },
    TheoremSuite {
        id: "block-5",
        expectation: Expectation::AllShellable,
        description: "T1-graphs n <= 10, r in {5, 6}",
    },
    TheoremSuite {
        id: "whisker",
        expectation: Expectation::AllShellable,
        description: "CCG(H, S, r) for a vertex cover S, r in {1, 2}",
    },
    TheoremSuite {
        id: "she",
        expectation: Expectation::AllShellable,
        description: "CCG(H, V(H), t) for chordal H, r <= 2t + 1 <= 5",
    },
    TheoremSuite {
        id: "clique-whisker",
        expectation: Expectation::AllShellable,
        description: "r-clique whiskerings with t_i = r in {1, 2}",
    },
    TheoremSuite {
        id: "clique-cycle",
        expectation: Expectation::AllShellable,
        description: "clique cycles G(r) with n in {3, 4} cliques, r in {1, 2}",
    },
    TheoremSuite {
        id: "she-higher",
        expectation: Expectation::NotShellable,
        description: "CCG(H, V(H), 1) with r = 4 is not shellable; its link is ind(C4)",
    },
    TheoremSuite {
        id: "last-ex",
        expectation: Expectation::NotShellable,
        description: "ind_2(W(C4)) is not shellable; the link over the whiskers is ind(C4)",
    },
    TheoremSuite {
        id: "engine",
        expectation: Expectation::EngineAgreement,
        description: "search engine against brute force on random complexes (<= 6 facets, ground <= 7)",
    },
];

pub fn registry() -> &'static [TheoremSuite] {
    REGISTRY
}

pub fn find_suite(id: &str) -> Result<&'static TheoremSuite> {
    REGISTRY
        .iter()
        .find(|s| s.id == id)
        .ok_or_else(|| Error::UnknownSuite(id.to_string()))
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Overrides the suite's sample count.
    pub samples: Option<usize>,
    /// Overrides the suite's largest vertex count.
    pub max_n: Option<usize>,
    pub budget: u64,
    /// Where certificates go; a temporary directory when unset.
    pub out_dir: Option<PathBuf>,
    /// Also run the per-component reading of the forest bound (reported only).
    pub per_component: bool,
    /// Cross-check w-chordality and contraction simpliciality on small instances.
    pub chain_checks: bool,
    /// Instances started after this much time count as unknown.
    pub time_limit: Option<Duration>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            samples: None,
            max_n: None,
            budget: crate::default_budget(),
            out_dir: None,
            per_component: false,
            chain_checks: true,
            time_limit: None,
        }
    }
}

/// Counts for the implication chain w-chordal ⇒ contractions simplicial ⇒ shellable.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ChainStats {
    pub w_chordal_checked: usize,
    pub w_chordal_holds: usize,
    pub contraction_checked: usize,
    pub contraction_holds: usize,
    pub violations: usize,
}

/// Agreement of the search engine with brute force.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EngineStats {
    pub compared: usize,
    pub disagreements: usize,
}

/// Outcomes of instances that are reported but not asserted.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VariantStats {
    pub instances: usize,
    pub shellable: usize,
    pub not_shellable: usize,
    pub unknown: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub suite: String,
    pub expectation: Expectation,
    pub instances: usize,
    pub pass: usize,
    pub fail: usize,
    pub unknown: usize,
    /// Distinct host graphs among the instances.
    pub distinct_graphs: usize,
    pub certificates: Vec<String>,
    pub failures: Vec<String>,
    pub chain: ChainStats,
    pub engine: EngineStats,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub variant: Option<VariantStats>,
    pub seed: u64,
    pub budget: u64,
    pub version: String,
    pub elapsed_ms: u128,
}

impl RunReport {
    pub fn all_passed(&self) -> bool {
        self.fail == 0 && self.unknown == 0 && self.pass == self.instances
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} instances ({} graphs), {} pass, {} fail, {} unknown",
            self.suite, self.instances, self.distinct_graphs, self.pass, self.fail, self.unknown
        )?;
        if self.chain.w_chordal_checked + self.chain.contraction_checked > 0 {
            write!(
                f,
                "; chain {}+{} checked, {} violations",
                self.chain.w_chordal_checked, self.chain.contraction_checked, self.chain.violations
            )?;
        }
        if self.engine.compared > 0 {
            write!(
                f,
                "; brute force {} compared, {} disagreements",
                self.engine.compared, self.engine.disagreements
            )?;
        }
        if let Some(v) = &self.variant {
            write!(
                f,
                "; variant {} instances, {} shellable, {} not, {} unknown",
                v.instances, v.shellable, v.not_shellable, v.unknown
            )?;
        }
        Ok(())
    }
}

/// What an instance must satisfy before it is tested.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Hypothesis {
    /// Guaranteed by the generating construction.
    Construction,
    ChordalCond,
    BlockGraph,
    BlockDiameter(usize),
    TreeDiameter(usize),
    ForestLower,
    ForestLowerPerComponent,
    T3FreeBlockGraph,
    Forest,
    T2,
    T1AtLeast5,
}

impl Hypothesis {
    pub fn holds(self, g: &Graph, r: usize) -> bool {
        let n = g.vertex_count();
        let within = |d: usize| matches!(g.diameter(), Ok(Distance::Finite(x)) if x <= d);
        match self {
            Hypothesis::Construction => true,
            Hypothesis::ChordalCond => n >= 3 && (r + 2 == n || r + 1 == n),
            Hypothesis::BlockGraph => g.is_block_graph(),
            Hypothesis::BlockDiameter(d) => g.is_block_graph() && within(d) && r >= 2,
            Hypothesis::TreeDiameter(d) => g.is_tree() && within(d) && r >= 2,
            Hypothesis::ForestLower => g.is_forest() && r + 5 >= n,
            Hypothesis::ForestLowerPerComponent => {
                let largest = g.connected_components().iter().map(|c| c.len()).max().unwrap_or(0);
                g.is_forest() && r + 5 >= largest
            }
            Hypothesis::T3FreeBlockGraph => {
                g.is_block_graph() && g.contains_induced(&t3_graph().graph).is_none()
            }
            Hypothesis::Forest => g.is_forest(),
            Hypothesis::T2 => g.classify().is_t2,
            Hypothesis::T1AtLeast5 => g.classify().is_t1 && r >= 5,
        }
    }
}

#[derive(Clone, Debug)]
pub enum Check {
    Shellable,
    NotShellable {
        /// The link of this face must have exactly these facets.
        link: Option<(VertexSet, Vec<VertexSet>)>,
    },
    NotWChordal {
        expected_minor: Option<Vec<VertexSet>>,
    },
    OracleEquality,
    EngineAgreement(SimplicialComplex),
    /// Runs like `Shellable` but only feeds [`VariantStats`].
    Variant,
}

#[derive(Clone, Debug)]
pub struct Instance {
    pub label: String,
    pub graph: Graph,
    pub r: usize,
    pub check: Check,
    pub hypothesis: Hypothesis,
}

impl Instance {
    fn new(label: impl Into<String>, graph: Graph, r: usize, check: Check, hypothesis: Hypothesis) -> Self {
        Instance {
            label: label.into(),
            graph,
            r,
            check,
            hypothesis,
        }
    }
}

enum Verdict {
    Pass,
    Fail,
    Unknown,
}

enum Artifact {
    Cert(Certificate),
    Graph(Graph),
}

struct Evaluated {
    verdict: Verdict,
    artifact: Option<Artifact>,
    chain: ChainStats,
    engine: EngineStats,
    variant: Option<ShellDecision>,
}

impl Evaluated {
    fn new(verdict: Verdict) -> Self {
        Evaluated {
            verdict,
            artifact: None,
            chain: ChainStats::default(),
            engine: EngineStats::default(),
            variant: None,
        }
    }

    fn with(mut self, artifact: Artifact) -> Self {
        self.artifact = Some(artifact);
        self
    }
}

/// Runs the suite registered as `id`.
pub fn run_suite(id: &str, cfg: &SuiteConfig) -> Result<RunReport> {
    let suite = find_suite(id)?;
    let started = Instant::now();
    let instances = instances(suite.id, cfg)?;
    let evaluated: Vec<Evaluated> = instances
        .par_iter()
        .map(|inst| {
            if cfg.time_limit.is_some_and(|limit| started.elapsed() > limit) {
                return Evaluated::new(Verdict::Unknown);
            }
            evaluate(inst, cfg)
        })
        .collect();
    let out_dir = cfg
        .out_dir
        .clone()
        .unwrap_or_else(|| std::env::temp_dir().join("rindep-certificates"));
    let mut report = RunReport {
        suite: suite.id.to_string(),
        expectation: suite.expectation,
        instances: 0,
        pass: 0,
        fail: 0,
        unknown: 0,
        distinct_graphs: instances
            .iter()
            .map(|i| to_text(&i.graph))
            .collect::<HashSet<_>>()
            .len(),
        certificates: Vec::new(),
        failures: Vec::new(),
        chain: ChainStats::default(),
        engine: EngineStats::default(),
        variant: None,
        seed: cfg.seed,
        budget: cfg.budget,
        version: env!("CARGO_PKG_VERSION").to_string(),
        elapsed_ms: 0,
    };
    for (idx, (inst, ev)) in instances.iter().zip(evaluated).enumerate() {
        add_chain(&mut report.chain, ev.chain);
        report.engine.compared += ev.engine.compared;
        report.engine.disagreements += ev.engine.disagreements;
        if let Some(decision) = ev.variant {
            let v = report.variant.get_or_insert_with(VariantStats::default);
            v.instances += 1;
            match decision {
                ShellDecision::Shellable(_) => v.shellable += 1,
                ShellDecision::NotShellable { .. } => v.not_shellable += 1,
                ShellDecision::Unknown { .. } => v.unknown += 1,
            }
            continue;
        }
        report.instances += 1;
        let failed = matches!(ev.verdict, Verdict::Fail);
        match ev.verdict {
            Verdict::Pass => report.pass += 1,
            Verdict::Fail => {
                report.fail += 1;
                report.failures.push(inst.label.clone());
            }
            Verdict::Unknown => report.unknown += 1,
        }
        // failing instances always leave an artifact; passing ones only when asked
        if let Some(artifact) = ev.artifact {
            if failed || cfg.out_dir.is_some() {
                let path = persist(&out_dir, suite.id, idx, &artifact)?;
                report.certificates.push(path.display().to_string());
            }
        } else if failed {
            let path = persist(&out_dir, suite.id, idx, &Artifact::Graph(inst.graph.clone()))?;
            report.certificates.push(path.display().to_string());
        }
    }
    report.elapsed_ms = started.elapsed().as_millis();
    Ok(report)
}

fn add_chain(total: &mut ChainStats, c: ChainStats) {
    total.w_chordal_checked += c.w_chordal_checked;
    total.w_chordal_holds += c.w_chordal_holds;
    total.contraction_checked += c.contraction_checked;
    total.contraction_holds += c.contraction_holds;
    total.violations += c.violations;
}

fn persist(dir: &Path, suite: &str, idx: usize, artifact: &Artifact) -> Result<PathBuf> {
    std::fs::create_dir_all(dir)?;
    match artifact {
        Artifact::Cert(c) => {
            let path = dir.join(format!("{suite}-{idx:05}-{}.json", c.kind()));
            c.write(&path)?;
            Ok(path)
        }
        Artifact::Graph(g) => {
            let path = dir.join(format!("{suite}-{idx:05}-graph.txt"));
            std::fs::write(&path, to_text(g))?;
            Ok(path)
        }
    }
}

/// Evaluates one instance.
fn evaluate(inst: &Instance, cfg: &SuiteConfig) -> Evaluated {
    let (g, r) = (&inst.graph, inst.r);
    if !inst.hypothesis.holds(g, r) {
        return Evaluated::new(Verdict::Fail).with(Artifact::Graph(g.clone()));
    }
    match &inst.check {
        Check::Shellable | Check::Variant => {
            let d = ind_r_complex(g, r);
            let decision = is_shellable(&d, cfg.budget);
            let mut ev = match &decision {
                ShellDecision::Shellable(c) => Evaluated::new(Verdict::Pass)
                    .with(Artifact::Cert(Certificate::shelling(g, r, c.order.clone()))),
                ShellDecision::NotShellable { nodes } => Evaluated::new(Verdict::Fail).with(
                    Artifact::Cert(Certificate::exhausted(g, r, d.facet_count(), *nodes)),
                ),
                ShellDecision::Unknown { .. } => Evaluated::new(Verdict::Unknown),
            };
            if matches!(inst.check, Check::Shellable) {
                if cfg.chain_checks {
                    ev.chain = chain(g, r, &decision, cfg.budget);
                }
                ev.engine = engine(&d, &decision);
            } else {
                ev.artifact = None;
                ev.variant = Some(decision);
            }
            ev
        }
        Check::NotShellable { link } => {
            let d = ind_r_complex(g, r);
            if let Some((face, expected)) = link {
                let ok = d
                    .link(*face)
                    .map(|l| l.facets() == expected.as_slice())
                    .unwrap_or(false);
                if !ok {
                    return Evaluated::new(Verdict::Fail);
                }
            }
            let decision = is_shellable(&d, cfg.budget);
            let mut ev = match &decision {
                ShellDecision::NotShellable { nodes } => Evaluated::new(Verdict::Pass).with(
                    Artifact::Cert(Certificate::exhausted(g, r, d.facet_count(), *nodes)),
                ),
                ShellDecision::Shellable(c) => Evaluated::new(Verdict::Fail)
                    .with(Artifact::Cert(Certificate::shelling(g, r, c.order.clone()))),
                ShellDecision::Unknown { .. } => Evaluated::new(Verdict::Unknown),
            };
            ev.engine = engine(&d, &decision);
            ev
        }
        Check::NotWChordal { expected_minor } => match is_w_chordal(&con_r(g, r), cfg.budget) {
            ChordalDecision::Fails(cert) => {
                let matches = expected_minor
                    .as_ref()
                    .is_none_or(|edges| *edges == cert.minor_edges);
                let verdict = if matches && cert.verify(&con_r(g, r)) {
                    Verdict::Pass
                } else {
                    Verdict::Fail
                };
                Evaluated::new(verdict).with(Artifact::Cert(Certificate::bad_minor(g, r, &cert)))
            }
            ChordalDecision::Holds { .. } => Evaluated::new(Verdict::Fail),
            ChordalDecision::Unknown { .. } => Evaluated::new(Verdict::Unknown),
        },
        Check::OracleEquality => {
            let direct = ind_r_complex(g, r);
            let via = independence_complex(&con_r(g, r));
            if direct.facets() == via.facets() {
                Evaluated::new(Verdict::Pass)
            } else {
                Evaluated::new(Verdict::Fail)
            }
        }
        Check::EngineAgreement(d) => {
            let decision = is_shellable(d, cfg.budget);
            let stats = engine(d, &decision);
            let verdict = if decision.is_unknown() {
                Verdict::Unknown
            } else if stats.compared == 1 && stats.disagreements == 0 {
                Verdict::Pass
            } else {
                Verdict::Fail
            };
            let mut ev = Evaluated::new(verdict);
            ev.engine = stats;
            ev
        }
    }
}

fn chain(g: &Graph, r: usize, decision: &ShellDecision, budget: u64) -> ChainStats {
    let mut stats = ChainStats::default();
    let n = g.vertex_count();
    if n > CONTRACTION_CHECK_MAX_N {
        return stats;
    }
    let h = con_r(g, r);
    let refuted = decision.is_not_shellable();
    let contraction = every_contraction_simplicial(&h, budget);
    if !contraction.is_unknown() {
        stats.contraction_checked = 1;
        if contraction.holds() {
            stats.contraction_holds = 1;
            if refuted {
                stats.violations += 1;
            }
        }
    }
    if n <= CHORDAL_CHECK_MAX_N && r <= CHORDAL_CHECK_MAX_R {
        let chordal = is_w_chordal(&h, budget);
        if !chordal.is_unknown() {
            stats.w_chordal_checked = 1;
            if chordal.holds() {
                stats.w_chordal_holds = 1;
                if refuted || contraction.fails() {
                    stats.violations += 1;
                }
            }
        }
    }
    stats
}

fn engine(d: &SimplicialComplex, decision: &ShellDecision) -> EngineStats {
    if decision.is_unknown() || d.facet_count() > BRUTE_FORCE_LIMIT {
        return EngineStats::default();
    }
    let brute = brute_force_shellable(d).expect("within the brute-force limit");
    EngineStats {
        compared: 1,
        disagreements: usize::from(brute.is_shellable() != decision.is_shellable()),
    }
}

/// Draws the instances of a suite; deterministic in `cfg.seed`.
pub fn instances(id: &str, cfg: &SuiteConfig) -> Result<Vec<Instance>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    // one independent stream per suite
    rng.set_stream(REGISTRY.iter().position(|s| s.id == id).unwrap_or(usize::MAX) as u64);
    let samples = |default: usize| cfg.samples.unwrap_or(default);
    let max_n = |default: usize| cfg.max_n.unwrap_or(default);
    let mut out = Vec::new();
    match id {
        "con-ind" => {
            for n in 1..=max_n(5).min(census::GRAPH_LIMIT) {
                for (i, g) in census::connected_graphs(n)?.into_iter().enumerate() {
                    for r in 1..=4 {
                        out.push(Instance::new(
                            format!("connected n={n} #{i} r={r}"),
                            g.clone(),
                            r,
                            Check::OracleEquality,
                            Hypothesis::Construction,
                        ));
                    }
                }
            }
            for i in 0..samples(300) {
                let n = rng.gen_range(1..=7);
                let g = random_graph(n, &mut rng);
                for r in 1..=4 {
                    out.push(Instance::new(
                        format!("random #{i} n={n} r={r}"),
                        g.clone(),
                        r,
                        Check::OracleEquality,
                        Hypothesis::Construction,
                    ));
                }
            }
        }
        "not-chordal" => {
            for (r, t) in [(4, 1), (5, 2), (4, 2)] {
                let p = Graph::path(t);
                let lg = counterexample_gt(r, [&p, &p, &p])?;
                // larger cases can hit a smaller bad minor first
                let expected = (r == 4 && t == 1).then(|| gt_minor(&lg));
                out.push(Instance::new(
                    format!("G_t r={r} t={t}"),
                    lg.graph,
                    r,
                    Check::NotWChordal {
                        expected_minor: expected,
                    },
                    Hypothesis::Construction,
                ));
            }
        }
        "chordal-cond" => {
            for n in 3..=max_n(6).min(census::GRAPH_LIMIT) {
                for (i, g) in census::graphs(n)?.into_iter().enumerate() {
                    for r in [n - 2, n - 1] {
                        out.push(Instance::new(
                            format!("n={n} #{i} r={r}"),
                            g.clone(),
                            r,
                            Check::Shellable,
                            Hypothesis::ChordalCond,
                        ));
                    }
                }
            }
        }
        "block-2" => {
            let top = max_n(7).min(census::GRAPH_LIMIT);
            let mut graphs: Vec<Graph> = Vec::new();
            for n in 1..=top {
                graphs.extend(census::graphs(n)?.into_iter().filter(|g| g.is_block_graph()));
            }
            let target = samples(500);
            let mut seen: HashSet<String> = graphs.iter().map(to_text).collect();
            let mut attempts = 0;
            while graphs.len() < target && attempts < target * 200 {
                attempts += 1;
                let n = rng.gen_range(1..=top);
                let mut g = random_family(FamilyKind::BlockGraph, n, rng.gen());
                if n < top && rng.gen_bool(0.3) {
                    let m = rng.gen_range(1..=top - n);
                    g = g.disjoint_union(&random_family(FamilyKind::BlockGraph, m, rng.gen()))?;
                }
                let g = shuffled(&g, &mut rng);
                if seen.insert(to_text(&g)) {
                    graphs.push(g);
                }
            }
            for (i, g) in graphs.into_iter().enumerate() {
                out.push(Instance::new(
                    format!("block #{i}"),
                    g,
                    2,
                    Check::Shellable,
                    Hypothesis::BlockGraph,
                ));
            }
        }
        "block-diam" => {
            let top = max_n(10);
            let graphs = sample_distinct(samples(200), &mut rng, |rng| {
                let n = rng.gen_range(1..=top);
                let g = random_family(FamilyKind::BlockGraph, n, rng.gen());
                matches!(g.diameter(), Ok(Distance::Finite(d)) if d <= 4).then_some(g)
            });
            for (i, g) in graphs.into_iter().enumerate() {
                for r in [2, 3] {
                    out.push(Instance::new(
                        format!("block #{i} r={r}"),
                        g.clone(),
                        r,
                        Check::Shellable,
                        Hypothesis::BlockDiameter(4),
                    ));
                }
            }
        }
        "tree-diam" => {
            for n in 1..=max_n(9) {
                for (i, g) in census::trees(n)?.into_iter().enumerate() {
                    if !matches!(g.diameter(), Ok(Distance::Finite(d)) if d <= 5) {
                        continue;
                    }
                    for r in [2, 3, 4] {
                        out.push(Instance::new(
                            format!("tree n={n} #{i} r={r}"),
                            g.clone(),
                            r,
                            Check::Shellable,
                            Hypothesis::TreeDiameter(5),
                        ));
                    }
                }
            }
        }
        "tree-lower" => {
            for n in 1..=max_n(9) {
                for (i, g) in census::forests(n)?.into_iter().enumerate() {
                    let low = n.saturating_sub(5).max(1);
                    for r in low..=n {
                        out.push(Instance::new(
                            format!("forest n={n} #{i} r={r}"),
                            g.clone(),
                            r,
                            Check::Shellable,
                            Hypothesis::ForestLower,
                        ));
                    }
                    if cfg.per_component {
                        let largest = g.connected_components().iter().map(|c| c.len()).max().unwrap_or(0);
                        let from = largest.saturating_sub(5).max(1);
                        for r in from..low {
                            out.push(Instance::new(
                                format!("forest n={n} #{i} r={r} (per component)"),
                                g.clone(),
                                r,
                                Check::Variant,
                                Hypothesis::ForestLowerPerComponent,
                            ));
                        }
                    }
                }
            }
        }
        "block-3" => {
            let top = max_n(9);
            let t3 = t3_graph().graph;
            let graphs = sample_distinct(samples(300), &mut rng, |rng| {
                let n = rng.gen_range(1..=top);
                let g = shuffled(&random_family(FamilyKind::BlockGraph, n, rng.gen()), rng);
                g.contains_induced(&t3).is_none().then_some(g)
            });
            for (i, g) in graphs.into_iter().enumerate() {
                out.push(Instance::new(
                    format!("block #{i}"),
                    g,
                    3,
                    Check::Shellable,
                    Hypothesis::T3FreeBlockGraph,
                ));
            }
        }
        "3-tree" => {
            for n in 1..=max_n(8) {
                for (i, g) in census::forests(n)?.into_iter().enumerate() {
                    out.push(Instance::new(
                        format!("forest n={n} #{i}"),
                        g,
                        3,
                        Check::Shellable,
                        Hypothesis::Forest,
                    ));
                }
            }
        }
        "block-4" => {
            let top = max_n(10);
            let graphs = sample_distinct(samples(150), &mut rng, |rng| {
                let n = rng.gen_range(1..=top);
                Some(shuffled(&random_family(FamilyKind::T2, n, rng.gen()), rng))
            });
            for (i, g) in graphs.into_iter().enumerate() {
                out.push(Instance::new(format!("T2 #{i}"), g, 4, Check::Shellable, Hypothesis::T2));
            }
        }
        "block-5" => {
            let top = max_n(10);
            let graphs = sample_distinct(samples(150), &mut rng, |rng| {
                let n = rng.gen_range(1..=top);
                Some(shuffled(&random_family(FamilyKind::T1, n, rng.gen()), rng))
            });
            for (i, g) in graphs.into_iter().enumerate() {
                for r in [5, 6] {
                    out.push(Instance::new(
                        format!("T1 #{i} r={r}"),
                        g.clone(),
                        r,
                        Check::Shellable,
                        Hypothesis::T1AtLeast5,
                    ));
                }
            }
        }
        "whisker" => {
            let top = max_n(5);
            for i in 0..samples(100) {
                let r = rng.gen_range(1..=2);
                let h = random_graph(rng.gen_range(1..=top), &mut rng);
                let s = random_cover(&h, &mut rng);
                let sizes: Vec<Vec<usize>> = (0..s.len()).map(|_| star_sizes(r, &mut rng)).collect();
                let g = attach_star_cliques(&h, s, r, &sizes, true)?.graph;
                out.push(Instance::new(
                    format!("CCG #{i} r={r}"),
                    g,
                    r,
                    Check::Shellable,
                    Hypothesis::Construction,
                ));
            }
        }
        "she" => {
            let top = max_n(4);
            for i in 0..samples(100) {
                let t = rng.gen_range(1..=2);
                let r = rng.gen_range(1..=2 * t + 1);
                let n = rng.gen_range(1..=if t == 1 { top } else { top.min(3) });
                let h = shuffled(&random_family(FamilyKind::Chordal, n, rng.gen()), &mut rng);
                let sizes: Vec<Vec<usize>> = (0..n).map(|_| star_sizes(t, &mut rng)).collect();
                let g = attach_star_cliques(&h, h.vertices(), t, &sizes, false)?.graph;
                out.push(Instance::new(
                    format!("CCG #{i} t={t} r={r}"),
                    g,
                    r,
                    Check::Shellable,
                    Hypothesis::Construction,
                ));
            }
        }
        "clique-whisker" => {
            let top = max_n(5);
            for i in 0..samples(100) {
                let r = rng.gen_range(1..=2);
                let g = random_graph(rng.gen_range(1..=top), &mut rng);
                let p = random_clique_partition(&g, r, &mut rng);
                let w = clique_whisker(&g, &p)?.graph;
                out.push(Instance::new(
                    format!("G^pi #{i} r={r} parts={}", p.parts.len()),
                    w,
                    r,
                    Check::Shellable,
                    Hypothesis::Construction,
                ));
            }
        }
        "clique-cycle" => {
            for i in 0..samples(100) {
                let r = rng.gen_range(1..=2);
                let n = rng.gen_range(3..=4);
                let sizes: Vec<usize> = (0..n).map(|_| rng.gen_range(2..=3)).collect();
                let mut positions: Vec<usize> = (0..n).collect();
                positions.shuffle(&mut rng);
                positions.truncate(rng.gen_range(1..=n));
                let attachments: Vec<(usize, Vec<usize>)> = positions
                    .iter()
                    .enumerate()
                    .map(|(k, &pos)| {
                        let sc = if k == 0 {
                            star_sizes(r, &mut rng)
                        } else {
                            vec![rng.gen_range(1..=r + 1)]
                        };
                        (pos, sc)
                    })
                    .collect();
                let g = clique_cycle_graph(&sizes, &attachments, r)?.graph;
                out.push(Instance::new(
                    format!("G(r) #{i} n={n} r={r}"),
                    g,
                    r,
                    Check::Shellable,
                    Hypothesis::Construction,
                ));
            }
        }
        "she-higher" => {
            let f = she_higher_family(2, 1)?;
            let [a1, c, b1, d] = f.cycle;
            let mut expected = vec![VertexSet::from([a1, b1]), VertexSet::from([c, d])];
            crate::vset::canonicalize(&mut expected);
            out.push(Instance::new(
                format!("n=2 t=1 r={}", f.r),
                f.g.graph,
                f.r,
                Check::NotShellable {
                    link: Some((f.contracted, expected)),
                },
                Hypothesis::Construction,
            ));
        }
        "last-ex" => {
            let c4 = Graph::cycle(4);
            let w = whiskered(&c4)?.graph;
            let whiskers = w.vertices().difference(c4.vertices());
            out.push(Instance::new(
                "W(C4) r=2",
                w,
                2,
                Check::NotShellable {
                    link: Some((whiskers, vec![VertexSet::from([0, 2]), VertexSet::from([1, 3])])),
                },
                Hypothesis::Construction,
            ));
        }
        "engine" => {
            for i in 0..samples(500) {
                let d = random_complex(7, 6, &mut rng);
                out.push(Instance::new(
                    format!("complex #{i} ({} facets)", d.facet_count()),
                    Graph::empty(0),
                    1,
                    Check::EngineAgreement(d),
                    Hypothesis::Construction,
                ));
            }
        }
        other => return Err(Error::UnknownSuite(other.to_string())),
    }
    Ok(out)
}

/// The six four-vertex edges on `v1..v7` expected after contracting the
/// attached graphs.
pub fn gt_minor(lg: &crate::constructions::LabeledGraph) -> Vec<VertexSet> {
    let named = [
        ["v1", "v2", "v3", "v4"],
        ["v1", "v2", "v3", "v6"],
        ["v5", "v4", "v1", "v6"],
        ["v5", "v4", "v1", "v2"],
        ["v7", "v6", "v1", "v4"],
        ["v7", "v6", "v1", "v2"],
    ];
    let mut edges: Vec<VertexSet> = named
        .iter()
        .map(|e| lg.vertex_set(e).expect("spider labels"))
        .collect();
    crate::vset::canonicalize(&mut edges);
    edges
}

/// `G(n, p)` with `p` itself drawn from `[0.2, 0.8)`.
pub fn random_graph(n: usize, rng: &mut impl Rng) -> Graph {
    let p = rng.gen_range(0.2..0.8);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("valid edges")
}

fn shuffled(g: &Graph, rng: &mut impl Rng) -> Graph {
    let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
    perm.shuffle(rng);
    g.permute(&perm)
}

/// Up to `count` distinct graphs from `gen` (which may decline a draw).
fn sample_distinct(
    count: usize,
    rng: &mut ChaCha8Rng,
    mut gen: impl FnMut(&mut ChaCha8Rng) -> Option<Graph>,
) -> Vec<Graph> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count && attempts < count * 200 {
        attempts += 1;
        if let Some(g) = gen(rng) {
            if seen.insert(to_text(&g)) {
                out.push(g);
            }
        }
    }
    out
}

/// A random subset extended until it covers every edge.
fn random_cover(h: &Graph, rng: &mut impl Rng) -> VertexSet {
    let mut s: VertexSet = h.vertices().iter().filter(|_| rng.gen_bool(0.5)).collect();
    for (u, v) in h.edges() {
        if !s.contains(u) && !s.contains(v) {
            s.insert(if rng.gen_bool(0.5) { u } else { v });
        }
    }
    s
}

/// Clique sizes of a star-clique with at least `t + 1` vertices.
fn star_sizes(t: usize, rng: &mut impl Rng) -> Vec<usize> {
    match rng.gen_range(0..3) {
        0 => vec![t],
        1 => vec![t + 1],
        _ => {
            let first = rng.gen_range(1..=t);
            if first == t {
                vec![t, 1]
            } else {
                vec![first, t - first]
            }
        }
    }
}

/// Greedy random clique partition, sometimes with an extra empty part.
fn random_clique_partition(g: &Graph, t: usize, rng: &mut impl Rng) -> CliquePartition {
    let mut order: Vec<usize> = g.vertices().to_vec();
    order.shuffle(rng);
    let mut parts: Vec<VertexSet> = Vec::new();
    for v in order {
        let fits: Vec<usize> = (0..parts.len())
            .filter(|&i| parts[i].is_subset(g.neighbors(v)))
            .collect();
        if !fits.is_empty() && rng.gen_bool(0.7) {
            let i = fits[rng.gen_range(0..fits.len())];
            parts[i].insert(v);
        } else {
            parts.push(VertexSet::singleton(v));
        }
    }
    if rng.gen_bool(0.2) {
        parts.push(VertexSet::EMPTY);
    }
    CliquePartition {
        whisker_counts: vec![t; parts.len()],
        parts,
    }
}

/// Facets drawn as random subsets of a ground set of at most `ground` vertices.
pub fn random_complex(ground: usize, max_facets: usize, rng: &mut impl Rng) -> SimplicialComplex {
    let k = rng.gen_range(1..=ground);
    let m = rng.gen_range(1..=max_facets);
    let p = rng.gen_range(0.3..0.8);
    let faces: Vec<VertexSet> = (0..m)
        .map(|_| (0..k).filter(|_| rng.gen_bool(p)).collect())
        .collect();
    SimplicialComplex::new(VertexSet::full(k), faces).expect("faces inside the ground set")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> SuiteConfig {
        SuiteConfig {
            samples: Some(10),
            budget: 1_000_000,
            ..SuiteConfig::default()
        }
    }

    #[test]
    fn registry_lookup() {
        assert!(find_suite("block-2").is_ok());
        assert!(matches!(find_suite("nope"), Err(Error::UnknownSuite(_))));
        assert!(matches!(run_suite("nope", &quick()), Err(Error::UnknownSuite(_))));
        let ids: HashSet<&str> = registry().iter().map(|s| s.id).collect();
        assert_eq!(ids.len(), registry().len());
    }

    #[test]
    fn instance_streams_are_deterministic() {
        for suite in registry() {
            let a = instances(suite.id, &quick()).unwrap();
            let b = instances(suite.id, &quick()).unwrap();
            assert_eq!(a.len(), b.len(), "{}", suite.id);
            for (x, y) in a.iter().zip(&b) {
                assert_eq!((&x.label, &x.graph, x.r), (&y.label, &y.graph, y.r));
            }
        }
    }

    #[test]
    fn hypotheses_hold_for_drawn_instances() {
        for id in ["block-2", "block-diam", "block-3", "block-4", "block-5", "chordal-cond"] {
            let cfg = SuiteConfig {
                max_n: Some(6),
                ..quick()
            };
            for inst in instances(id, &cfg).unwrap() {
                assert!(inst.hypothesis.holds(&inst.graph, inst.r), "{id}: {}", inst.label);
            }
        }
    }

    #[test]
    fn small_suites_pass() {
        let dir = tempfile::tempdir().unwrap();
        for id in ["last-ex", "she-higher", "not-chordal", "clique-cycle", "engine"] {
            let cfg = SuiteConfig {
                out_dir: Some(dir.path().to_path_buf()),
                ..quick()
            };
            let report = run_suite(id, &cfg).unwrap();
            assert!(report.all_passed(), "{report}");
            assert_eq!(report.pass + report.fail + report.unknown, report.instances);
        }
        for entry in std::fs::read_dir(dir.path()).unwrap() {
            let path = entry.unwrap().path();
            let cert = Certificate::read(&path).unwrap();
            assert!(cert.verify_self_contained().unwrap(), "{}", path.display());
        }
    }

    #[test]
    fn failures_leave_artifacts() {
        // ind(C4) is not shellable, so demanding a shelling fails
        let dir = tempfile::tempdir().unwrap();
        let cfg = SuiteConfig {
            out_dir: Some(dir.path().to_path_buf()),
            ..quick()
        };
        let inst = Instance::new("C4", Graph::cycle(4), 1, Check::Shellable, Hypothesis::Construction);
        let ev = evaluate(&inst, &cfg);
        assert!(matches!(ev.verdict, Verdict::Fail));
        let Some(Artifact::Cert(cert)) = ev.artifact else {
            panic!("expected a certificate");
        };
        assert_eq!(cert.kind(), "exhausted_search");
        assert!(cert.verify(&Graph::cycle(4)).unwrap());
        assert_eq!(ev.chain.violations, 0);
        assert_eq!(ev.engine.disagreements, 0);
    }
}
