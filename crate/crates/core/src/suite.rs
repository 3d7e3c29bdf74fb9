//! Property checks over the builtin corpus and seeded random graphs, keyed
//! by the statement they exercise.
//!
//! Keys `1` to `8` are the structural theorems about graph topologies; the
//! remaining keys are the classical identities the implementation relies on.

use serde::Serialize;

use crate::cohomology::{betti_vector, d_squared_vanishes, euler_poincare_check};
use crate::fixedpoint::{fixed_invariant_set, lefschetz_number, nerve_automorphisms};
use crate::graph::{builtin_corpus, is_isomorphic, Graph};
use crate::homeo::{check_homeomorphic, is_one_homeomorphic, transport_subdivision, TopologicalGraph};
use crate::homotopy::{homotopy_equivalent_with, Budget};
use crate::invariants::{curvature, euler_characteristic, poincare_hopf_check};
use crate::random::{random_graph, random_injective, rng};
use crate::topology::{
    indiscrete_topology, is_connected_topological, is_path_connected, library_names, library_topology, nerve,
    star_topology, unit_ball_topology, validate_with, SubBasis,
};
use crate::{Rational, Result};

pub const SUITE_KEYS: [(&str, &str); 11] = [
    ("1", "every graph carries a graph topology (star graphs), with nerve equal to the graph"),
    ("2", "homeomorphisms preserve the dimension spectrum"),
    ("3", "homeomorphic graphs are homotopic"),
    ("4", "homeomorphic graphs have the same cohomology"),
    ("5", "homeomorphic graphs have the same Euler characteristic"),
    ("6", "topological connectedness equals path connectedness"),
    ("7", "1-homeomorphic triangle-free graphs are homeomorphic"),
    ("8", "automorphisms with nonzero Lefschetz number leave a linked element family invariant"),
    ("gauss-bonnet", "curvatures sum to the Euler characteristic"),
    ("poincare-hopf", "Poincare-Hopf indices sum to the Euler characteristic"),
    ("euler-poincare", "d^2 = 0 and the Euler-Poincare formula"),
];

#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub seed: u64,
    pub random_graphs: usize,
    /// Builtins with more vertices are skipped by the expensive checks.
    pub max_order: usize,
    pub budget: Budget,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: 1, random_graphs: 40, max_order: 12, budget: Budget::default() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub key: String,
    pub statement: String,
    pub cases: usize,
    pub failures: usize,
    /// The first few failing cases.
    pub examples: Vec<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

struct Tally {
    cases: usize,
    failures: usize,
    examples: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { cases: 0, failures: 0, examples: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < 5 {
                self.examples.push(what());
            }
        }
    }

    fn result<T>(&mut self, r: Result<T>, what: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.check(false, || format!("{}: {e}", what()));
                None
            }
        }
    }
}

fn random_corpus(config: &SuiteConfig, salt: u64) -> Vec<(String, Graph)> {
    let ps = [0.3, 0.5, 0.7];
    (0..config.random_graphs)
        .map(|k| {
            let seed = config.seed.wrapping_mul(1_000_003).wrapping_add(salt * 10_007 + k as u64);
            let n = 2 + (k % 9);
            let p = ps[k % 3];
            (format!("random(n={n},p={p},seed={seed})"), random_graph(n, p, seed))
        })
        .collect()
}

fn small_builtins(config: &SuiteConfig) -> Vec<(String, Graph)> {
    builtin_corpus()
        .into_iter()
        .filter(|(_, g)| g.order() > 0 && g.order() <= config.max_order)
        .map(|(n, g)| (n.to_string(), g))
        .collect()
}

/// Valid topologies on the small builtins and library entries, each also
/// transported to a shuffled copy of its graph.
fn topology_corpus(config: &SuiteConfig) -> Vec<(String, TopologicalGraph)> {
    let mut out = Vec::new();
    let mut add = |name: String, b: SubBasis| {
        if b.is_empty() {
            return;
        }
        if let Ok(t) = TopologicalGraph::with_budget(b, config.budget) {
            out.push((name, t));
        }
    };
    for (name, g) in small_builtins(config) {
        add(format!("star({name})"), star_topology(&g));
        add(format!("unit-ball({name})"), unit_ball_topology(&g));
        add(format!("indiscrete({name})"), indiscrete_topology(&g));
    }
    for name in library_names() {
        if let Ok(b) = library_topology(name) {
            add(format!("library({name})"), b);
        }
    }
    let originals = out.len();
    for k in 0..originals {
        let (name, t) = out[k].clone();
        let perm = random_injective(t.graph().order(), config.seed + k as u64);
        let labels = t.graph().labels().to_vec();
        let shuffled = t.subbasis().relabeled(|v| {
            let i = labels.binary_search(&v).expect("host label");
            100 + perm[i]
        });
        if let Ok(b) = shuffled {
            if let Ok(t2) = TopologicalGraph::with_budget(b, config.budget) {
                out.push((format!("shuffled {name}"), t2));
            }
        }
    }
    out
}

/// Topologies with their nerves, and the homeomorphic pairs among them.
struct HomeoCorpus {
    items: Vec<(String, TopologicalGraph)>,
    pairs: Vec<(usize, usize)>,
    errors: Vec<String>,
}

impl HomeoCorpus {
    fn build(config: &SuiteConfig) -> Self {
        let items = topology_corpus(config);
        let nerves: Vec<_> = items.iter().map(|(_, t)| t.nerve()).collect();
        let mut pairs = Vec::new();
        let mut errors = Vec::new();
        for i in 0..items.len() {
            for j in i + 1..items.len() {
                let (a, b) = (&nerves[i], &nerves[j]);
                if a.len() != b.len() || a.graph.size() != b.graph.size() {
                    continue;
                }
                match check_homeomorphic(&items[i].1, &items[j].1) {
                    Ok(Some(_)) => pairs.push((i, j)),
                    Ok(None) => {}
                    Err(e) => errors.push(format!("{} vs {}: {e}", items[i].0, items[j].0)),
                }
            }
        }
        HomeoCorpus { items, pairs, errors }
    }
}

fn spectrum(t: &TopologicalGraph) -> Vec<Rational> {
    let mut s = nerve(t.subbasis()).weights;
    s.sort();
    s
}

fn check_existence(config: &SuiteConfig, t: &mut Tally) {
    let mut graphs = small_builtins(config);
    graphs.extend(random_corpus(config, 1));
    for (name, g) in graphs {
        let b = star_topology(&g);
        let ok = validate_with(&b, config.budget).is_valid()
            && is_isomorphic(&nerve(&b).graph, &g, None, None).is_some();
        t.check(ok, || name);
    }
}

fn check_homeomorphism(key: &str, config: &SuiteConfig, corpus: &HomeoCorpus, t: &mut Tally) {
    for e in &corpus.errors {
        t.check(false, || e.clone());
    }
    for &(i, j) in &corpus.pairs {
        let ((na, a), (nb, b)) = (&corpus.items[i], &corpus.items[j]);
        let what = || format!("{na} ~ {nb}");
        match key {
            "2" => t.check(spectrum(a) == spectrum(b), what),
            "3" => t.check(!homotopy_equivalent_with(a.graph(), b.graph(), config.budget).is_no(), what),
            "4" => t.check(betti_vector(a.graph()) == betti_vector(b.graph()), what),
            _ => t.check(euler_characteristic(a.graph()) == euler_characteristic(b.graph()), what),
        }
    }
}

fn check_connectedness(config: &SuiteConfig, t: &mut Tally) {
    let mut graphs = small_builtins(config);
    graphs.extend(random_corpus(config, 6));
    for (name, g) in graphs {
        for b in [star_topology(&g), unit_ball_topology(&g)] {
            t.check(is_connected_topological(&b) == is_path_connected(&g), || name.clone());
        }
    }
}

fn check_subdivision(config: &SuiteConfig, t: &mut Tally) {
    use rand::Rng;
    let mut graphs: Vec<(String, Graph)> =
        small_builtins(config).into_iter().filter(|(_, g)| g.is_triangle_free() && g.size() > 0).collect();
    graphs.extend(random_corpus(config, 7).into_iter().filter(|(_, g)| g.is_triangle_free() && g.size() > 0));
    let mut r = rng(config.seed ^ 0x7);
    for (name, g) in graphs {
        let Some(base) = t.result(TopologicalGraph::with_budget(star_topology(&g), config.budget), || name.clone())
        else {
            continue;
        };
        let mut b = base.subbasis().clone();
        for _ in 0..r.gen_range(1..=3) {
            let edges = b.host().edge_labels();
            let (x, y) = edges[r.gen_range(0..edges.len())];
            b = transport_subdivision(&b, x, y).expect("edge of the host");
        }
        t.check(is_one_homeomorphic(&g, b.host(), config.budget).is_yes(), || format!("{name}: 1-homeomorphism"));
        let Some(refined) = t.result(TopologicalGraph::with_budget(b, config.budget), || format!("{name}: refined"))
        else {
            continue;
        };
        let homeo = t.result(check_homeomorphic(&base, &refined), || name.clone());
        t.check(matches!(homeo, Some(Some(_))), || format!("{name}: not homeomorphic after subdivision"));
    }
}

fn check_fixed_points(corpus: &HomeoCorpus, t: &mut Tally) {
    const MAX_AUTOMORPHISMS: usize = 400;
    for (name, top) in corpus.items.iter().filter(|(n, _)| !n.starts_with("shuffled")) {
        let nerve = top.nerve();
        for a in nerve_automorphisms(&nerve).into_iter().take(MAX_AUTOMORPHISMS) {
            let what = || format!("{name} under {:?}", a.permutation);
            let Some(report) = t.result(lefschetz_number(&nerve.graph, &a.permutation), what) else { continue };
            let Some(found) = t.result(fixed_invariant_set(top, &a), what) else { continue };
            if report.lefschetz == 0 {
                continue;
            }
            let ok = found.is_some_and(|s| {
                let mut image: Vec<usize> = s.nodes.iter().map(|&i| a.permutation[i]).collect();
                image.sort_unstable();
                let linked = s.nodes.iter().all(|&i| s.nodes.iter().all(|&j| i == j || nerve.graph.has_edge(i, j)));
                image == s.nodes && linked && !s.nodes.is_empty()
            });
            t.check(ok, what);
        }
        let id: Vec<usize> = (0..nerve.len()).collect();
        if let Some(r) = t.result(lefschetz_number(&nerve.graph, &id), || name.clone()) {
            t.check(r.lefschetz == euler_characteristic(&nerve.graph), || format!("{name}: L(id) != chi"));
        }
    }
}

fn check_gauss_bonnet(config: &SuiteConfig, t: &mut Tally) {
    let mut graphs: Vec<(String, Graph)> = builtin_corpus().into_iter().map(|(n, g)| (n.to_string(), g)).collect();
    graphs.extend(random_corpus(config, 9));
    for (name, g) in graphs {
        let total: Rational = g.labels().iter().map(|&x| curvature(&g, x).expect("vertex")).sum();
        t.check(total == Rational::from_int(euler_characteristic(&g)), || name);
    }
}

fn check_poincare_hopf(config: &SuiteConfig, t: &mut Tally) {
    for (k, (name, g)) in random_corpus(config, 10).into_iter().enumerate() {
        for s in 0..5u64 {
            let f: Vec<Rational> =
                random_injective(g.order(), config.seed + 31 * k as u64 + s).into_iter().map(Rational::from_int).collect();
            let ok = poincare_hopf_check(&g, &f).is_ok_and(|r| r.equal);
            t.check(ok, || format!("{name}, function {s}"));
        }
    }
}

fn check_euler_poincare(config: &SuiteConfig, t: &mut Tally) {
    let mut graphs = small_builtins(config);
    graphs.extend(random_corpus(config, 11));
    for (name, g) in graphs {
        t.check(d_squared_vanishes(&g) && euler_poincare_check(&g).equal, || name);
    }
}

/// Runs the checks named by `keys` (all of them when empty), in the order of
/// [`SUITE_KEYS`]. Unknown keys are reported as an error string.
pub fn run_suite(keys: &[String], config: &SuiteConfig) -> std::result::Result<Vec<CheckResult>, String> {
    if let Some(bad) = keys.iter().find(|k| !SUITE_KEYS.iter().any(|(s, _)| s == k)) {
        return Err(format!("unknown suite key `{bad}`"));
    }
    let mut out = Vec::new();
    let mut corpus: Option<HomeoCorpus> = None;
    for (key, statement) in SUITE_KEYS {
        if !keys.is_empty() && !keys.iter().any(|k| k == key) {
            continue;
        }
        let mut t = Tally::new();
        match key {
            "1" => check_existence(config, &mut t),
            "2" | "3" | "4" | "5" => {
                check_homeomorphism(key, config, corpus.get_or_insert_with(|| HomeoCorpus::build(config)), &mut t)
            }
            "6" => check_connectedness(config, &mut t),
            "7" => check_subdivision(config, &mut t),
            "8" => check_fixed_points(corpus.get_or_insert_with(|| HomeoCorpus::build(config)), &mut t),
            "gauss-bonnet" => check_gauss_bonnet(config, &mut t),
            "poincare-hopf" => check_poincare_hopf(config, &mut t),
            _ => check_euler_poincare(config, &mut t),
        }
        out.push(CheckResult {
            key: key.to_string(),
            statement: statement.to_string(),
            cases: t.cases,
            failures: t.failures,
            examples: t.examples,
        });
    }
    Ok(out)
}
