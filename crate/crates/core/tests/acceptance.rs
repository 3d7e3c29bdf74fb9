//! Acceptance run: twelve criteria, one PASS/FAIL line each.
//!
//! Every sub-check is asserted except those listed in `KNOWN_GAPS`, which are
//! reported as FAIL with the reason and do not fail the run.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use grafotop::cohomology::{betti_vector, d_squared_vanishes, euler_poincare_check, hodge_laplacian};
use grafotop::fixedpoint::{fixed_invariant_set, identity, lefschetz_number, nerve_automorphisms};
use grafotop::graph::{builtin, builtin_corpus, is_isomorphic, Graph};
use grafotop::homeo::{check_homeomorphic, product_topology_experiment, TopologicalGraph};
use grafotop::invariants::{curvature, dimension, euler_characteristic, index_expectation, poincare_hopf_check};
use grafotop::random::{random_graph, random_injective, random_relabeling, rng};
use grafotop::topology::{
    dimension_summary, indiscrete_topology, is_connected_topological, is_path_connected, library_names,
    library_topology, nerve, optimize, star_topology, unit_ball_topology, validate, SubBasis,
};
use grafotop::{Budget, Rational};
use rand::Rng;

/// Sub-checks that cannot hold for the worked example as stated.
const KNOWN_GAPS: &[(&str, &str)] = &[
    (
        "11: nerve euler characteristic is 0",
        "with star intervals on the P_3 factors opposite product elements meet in 2K_2 (dimension 1) and are \
         linked, so the product nerve is K_4 with chi 1",
    ),
    (
        "12: pyramid sub-basis returned unchanged",
        "growing (1,2,5) by vertex 4 keeps the topology valid and lowers the functional from 17/48 to 11/72",
    ),
];

const RANDOM_P: [f64; 3] = [0.3, 0.5, 0.7];

struct Criterion {
    id: usize,
    title: &'static str,
    limit: Option<Duration>,
    checks: Vec<(String, bool, String)>,
}

impl Criterion {
    fn new(id: usize, title: &'static str, limit_secs: Option<u64>) -> Self {
        Criterion { id, title, limit: limit_secs.map(Duration::from_secs), checks: Vec::new() }
    }

    fn check(&mut self, name: &str, ok: bool, detail: impl Into<String>) {
        self.checks.push((format!("{}: {name}", self.id), ok, detail.into()));
    }
}

fn g(name: &str, params: &[i64]) -> Graph {
    builtin(name, params).unwrap()
}

fn rat(s: &str) -> Rational {
    s.parse().unwrap()
}

/// Seeded random graphs with n <= 10 and p cycling through 0.3, 0.5, 0.7.
fn random_corpus(count: usize, seed: u64) -> Vec<Graph> {
    let mut r = rng(seed);
    (0..count).map(|i| random_graph(r.gen_range(1..=10), RANDOM_P[i % 3], r.gen())).collect()
}

fn c1() -> Criterion {
    let mut c = Criterion::new(1, "inductive dimension of bull and dumbbells", Some(1));
    let bull = dimension(&g("bull", &[]));
    c.check("dim(bull) = 22/15", bull == rat("22/15"), bull.to_string());
    for p in [[3, 4, 3], [3, 7, 15]] {
        let d = dimension(&g("dumbbell", &p));
        c.check(&format!("dim(dumbbell{p:?}) = 319/100"), d == rat("319/100"), d.to_string());
    }
    c
}

fn c2() -> Criterion {
    let mut c = Criterion::new(2, "Euler characteristics", Some(1));
    for (name, want) in [("petersen", -5), ("utility", -3), ("octahedron-antipodal", 1), ("cube", -4)] {
        let chi = euler_characteristic(&g(name, &[]));
        c.check(&format!("chi({name}) = {want}"), chi == want, chi.to_string());
    }
    c
}

fn c3() -> Criterion {
    let mut c = Criterion::new(3, "Gauss-Bonnet and index expectation", Some(30));
    let mut graphs: Vec<(String, Graph)> = builtin_corpus().into_iter().map(|(n, g)| (n.to_string(), g)).collect();
    graphs.extend(random_corpus(200, 3).into_iter().enumerate().map(|(i, g)| (format!("random #{i}"), g)));
    let (mut bonnet, mut expectation) = (Vec::new(), Vec::new());
    for (name, g) in &graphs {
        let ks: Vec<Rational> = g.labels().iter().map(|&x| curvature(g, x).unwrap()).collect();
        if ks.iter().cloned().sum::<Rational>() != Rational::from_int(euler_characteristic(g)) {
            bonnet.push(name.clone());
        }
        if g.labels().iter().zip(&ks).any(|(&x, k)| &index_expectation(g, x).unwrap() != k) {
            expectation.push(name.clone());
        }
    }
    c.check(&format!("sum K = chi on {} graphs", graphs.len()), bonnet.is_empty(), format!("{bonnet:?}"));
    c.check("index expectation = curvature", expectation.is_empty(), format!("{expectation:?}"));
    c
}

fn c4() -> Criterion {
    let mut c = Criterion::new(4, "Poincare-Hopf", Some(10));
    let mut bad = Vec::new();
    let mut cases = 0;
    for (i, g) in random_corpus(20, 4).iter().enumerate() {
        for k in 0..5u64 {
            let f: Vec<Rational> =
                random_injective(g.order(), 1000 * i as u64 + k).into_iter().map(Rational::from_int).collect();
            let r = poincare_hopf_check(g, &f).unwrap();
            cases += 1;
            if !r.equal {
                bad.push((i, k));
            }
        }
    }
    c.check(&format!("sum of indices = chi for {cases} functions"), bad.is_empty() && cases == 100, format!("{bad:?}"));
    c
}

fn c5() -> Criterion {
    let mut c = Criterion::new(5, "cohomology identities", Some(60));
    let mut graphs: Vec<(String, Graph)> = builtin_corpus().into_iter().map(|(n, g)| (n.to_string(), g)).collect();
    graphs.extend(random_corpus(100, 5).into_iter().enumerate().map(|(i, g)| (format!("random #{i}"), g)));
    let (mut d2, mut ep, mut hodge, mut orient) = (vec![], vec![], vec![], vec![]);
    for (i, (name, g)) in graphs.iter().enumerate() {
        if !d_squared_vanishes(g) {
            d2.push(name.clone());
        }
        if !euler_poincare_check(g).equal {
            ep.push(name.clone());
        }
        let betti = betti_vector(g);
        if betti.iter().enumerate().any(|(k, &b)| hodge_laplacian(g, k).nullity() != b) {
            hodge.push(name.clone());
        }
        if betti_vector(&random_relabeling(g, i as u64)) != betti {
            orient.push(name.clone());
        }
    }
    let n = graphs.len();
    c.check(&format!("d^2 = 0 on {n} graphs"), d2.is_empty(), format!("{d2:?}"));
    c.check("Euler-Poincare", ep.is_empty(), format!("{ep:?}"));
    c.check("nullity(L_k) = b_k", hodge.is_empty(), format!("{hodge:?}"));
    c.check("Betti vectors independent of orientation", orient.is_empty(), format!("{orient:?}"));
    c
}

fn c6() -> Criterion {
    let mut c = Criterion::new(6, "star topologies exist with nerve equal to the host", None);
    let mut graphs: Vec<(String, Graph)> = builtin_corpus().into_iter().map(|(n, g)| (n.to_string(), g)).collect();
    graphs.extend(random_corpus(200, 6).into_iter().enumerate().map(|(i, g)| (format!("random #{i}"), g)));
    let (mut invalid, mut nerves) = (vec![], vec![]);
    for (name, g) in &graphs {
        let b = star_topology(g);
        if !validate(&b).is_valid() {
            invalid.push(name.clone());
        }
        if is_isomorphic(&nerve(&b).graph, &g.relabel_dense(), None, None).is_none() {
            nerves.push(name.clone());
        }
    }
    c.check(&format!("star topology validates on {} graphs", graphs.len()), invalid.is_empty(), format!("{invalid:?}"));
    c.check("nerve isomorphic to host", nerves.is_empty(), format!("{nerves:?}"));
    c
}

fn c7() -> Criterion {
    let mut c = Criterion::new(7, "topological connectedness is path connectedness", None);
    let mut bad = vec![];
    let mut disconnected = 0;
    for (i, g) in random_corpus(100, 7).iter().enumerate() {
        let b = star_topology(g);
        let path = is_path_connected(g);
        disconnected += usize::from(!path);
        if is_connected_topological(&b) != path {
            bad.push(i);
        }
    }
    c.check("agreement on 100 random graphs", bad.is_empty(), format!("{bad:?}, {disconnected} disconnected"));
    c
}

fn c8() -> Criterion {
    let mut c = Criterion::new(8, "cycle sub-bases", None);
    let windows = library_topology("c6-windows").unwrap();
    let n = nerve(&windows);
    c.check("six windows validate", validate(&windows).is_valid(), "");
    c.check("window nerve is C_6", is_isomorphic(&n.graph, &g("cycle", &[6]), None, None).is_some(), "");

    let thirds = validate(&library_topology("c6-thirds").unwrap());
    c.check("three 4-windows rejected", thirds.overall.is_no(), thirds.overall.name());
    c.check("rejected because the nerve is not homotopic", thirds.nerve_homotopic.is_no(), "");

    let edges = library_topology("c6-edges").unwrap();
    let report = validate(&edges);
    let unlinked = report.dimension_pairs.iter().filter(|p| p.dim_intersection < p.dim_i.clone().min(p.dim_j.clone()));
    c.check("six edges rejected", report.overall.is_no(), report.overall.name());
    c.check("edge nerve is zero-dimensional", nerve(&edges).graph.size() == 0, "");
    c.check("intersection dimension assumption fails", unlinked.count() == report.dimension_pairs.len(), "");
    c.check("edge nerve is not homotopic", report.nerve_homotopic.is_no(), "");
    c
}

fn c9() -> Criterion {
    let mut c = Criterion::new(9, "the two homeomorphic graphs of order 10 and 15", None);
    let spectrum: Vec<Rational> = [1, 2, 1, 2, 1, 3].iter().map(|&k| Rational::from_int(k)).collect();
    let mut tops = Vec::new();
    for (name, order, host_dim) in [("circle-h10", 10, "131/60"), ("circle-g15", 15, "15/7")] {
        let b = library_topology(name).unwrap();
        c.check(&format!("{name} has order {order} and 6 elements"), b.host().order() == order && b.len() == 6, "");
        let s = dimension_summary(&b);
        c.check(&format!("{name} spectrum 1,2,1,2,1,3"), s.spectrum == spectrum, format!("{:?}", s.spectrum));
        c.check(&format!("{name} topological dimension 10/6"), s.topological_dimension == rat("10/6"), "");
        let d = dimension(b.host());
        c.check(&format!("dim({name}) = {host_dim}"), d == rat(host_dim), d.to_string());
        let n = nerve(&b);
        c.check(&format!("{name} nerve is C_6"), is_isomorphic(&n.graph, &g("cycle", &[6]), None, None).is_some(), "");
        match TopologicalGraph::new(b) {
            Ok(t) => tops.push(t),
            Err(e) => c.check(&format!("{name} validates"), false, e.to_string()),
        }
    }
    if let [h, gg] = tops.as_slice() {
        let m = check_homeomorphic(h, gg).unwrap();
        c.check("check_homeomorphic succeeds", m.is_some(), "");
    } else {
        c.check("check_homeomorphic succeeds", false, "a topology did not validate");
    }
    c
}

/// Valid topologies on the builtin corpus: stars, valid unit-ball covers and
/// the valid library sub-bases.
fn valid_builtin_topologies() -> Vec<(String, TopologicalGraph)> {
    let mut out = Vec::new();
    for (name, g) in builtin_corpus() {
        for (kind, b) in [("star", star_topology(&g)), ("unit-ball", unit_ball_topology(&g))] {
            if let Ok(t) = TopologicalGraph::new(b) {
                out.push((format!("{kind}:{name}"), t));
            }
        }
        if let Ok(t) = TopologicalGraph::new(indiscrete_topology(&g)) {
            out.push((format!("indiscrete:{name}"), t));
        }
    }
    for name in library_names() {
        if let Ok(t) = library_topology(name).and_then(TopologicalGraph::new) {
            out.push((format!("library:{name}"), t));
        }
    }
    out
}

fn c10() -> Criterion {
    let mut c = Criterion::new(10, "Lefschetz fixed point families", None);
    let (mut maps, mut nonzero, mut bad_family, mut bad_trace) = (0, 0, vec![], vec![]);
    for (name, t) in valid_builtin_topologies() {
        let n = t.nerve();
        for (k, a) in nerve_automorphisms(&n).iter().enumerate() {
            maps += 1;
            match lefschetz_number(&n.graph, &a.permutation) {
                Ok(r) if r.lefschetz != 0 => {
                    nonzero += 1;
                    let family = fixed_invariant_set(&t, a).ok().flatten();
                    let linked = family.is_some_and(|f| {
                        f.elements.iter().all(|x| f.elements.iter().all(|y| !x.vertices.intersection(&y.vertices).is_empty()))
                    });
                    if !linked {
                        bad_family.push(format!("{name}#{k}"));
                    }
                }
                Ok(_) => {}
                Err(e) => bad_trace.push(format!("{name}#{k}: {e}")),
            }
        }
    }
    c.check(&format!("invariant linked family for {nonzero} of {maps} maps"), bad_family.is_empty(), format!("{bad_family:?}"));
    c.check("trace identities hold", bad_trace.is_empty(), format!("{bad_trace:?}"));
    let mut bad_identity = vec![];
    for (name, g) in builtin_corpus() {
        let l = lefschetz_number(&g, &identity(g.order())).map(|r| r.lefschetz);
        if l.as_ref().ok() != Some(&euler_characteristic(&g)) {
            bad_identity.push(name);
        }
    }
    c.check("identity has L = chi on every builtin", bad_identity.is_empty(), format!("{bad_identity:?}"));
    c
}

fn c11() -> Criterion {
    let mut c = Criterion::new(11, "product of topologies", None);
    let a = star_topology(&g("cycle", &[4]));
    let b = indiscrete_topology(&g("path", &[2]));
    let r = product_topology_experiment(&a, &b, Budget::default()).unwrap();
    c.check("product graph is the cube", is_isomorphic(&r.graph, &g("cube", &[]), None, None).is_some(), "");
    c.check("validation No", r.validation.overall.is_no(), r.validation.overall.name());
    c.check("graph euler characteristic is -4", r.graph_euler_characteristic == -4, r.graph_euler_characteristic.to_string());
    c.check(
        "nerve euler characteristic is 0",
        r.nerve_euler_characteristic == 0,
        format!("got {}", r.nerve_euler_characteristic),
    );
    c
}

fn c12() -> Criterion {
    let mut c = Criterion::new(12, "dimension functional optimizer", None);
    let budget = 200;
    let seeds: Vec<(&str, SubBasis)> = vec![
        ("C_6", star_topology(&g("cycle", &[6]))),
        ("W_6", star_topology(&g("wheel", &[6]))),
        ("pyramid graph", star_topology(&g("c4-pyramid", &[]))),
    ];
    for (name, b) in seeds {
        let r = optimize(&b, budget).unwrap();
        let monotone = r.trace.windows(2).all(|w| w[1].functional <= w[0].functional)
            && r.final_functional <= r.initial_functional;
        c.check(&format!("{name}: terminates within budget"), !r.budget_exhausted && r.evaluations <= budget, "");
        c.check(&format!("{name}: functional never increases"), monotone, format!("{} -> {}", r.initial_functional, r.final_functional));
        c.check(&format!("{name}: result validates"), validate(&r.subbasis).is_valid(), "");
    }
    let ex4 = library_topology("c4-pyramid").unwrap();
    let r = optimize(&ex4, budget).unwrap();
    c.check(
        "pyramid sub-basis returned unchanged",
        r.subbasis == ex4 && r.local_optimum,
        format!("{} -> {} in {} steps", r.initial_functional, r.final_functional, r.trace.len()),
    );
    c
}

fn main() -> ExitCode {
    let criteria: [fn() -> Criterion; 12] = [c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12];
    let mut unexpected = Vec::new();
    for f in criteria {
        let start = Instant::now();
        let c = f();
        let elapsed = start.elapsed();
        let in_time = c.limit.is_none_or(|l| elapsed < l);
        let failed: Vec<&(String, bool, String)> = c.checks.iter().filter(|(_, ok, _)| !ok).collect();
        let verdict = if failed.is_empty() && in_time { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {verdict} ({:.2?}) {}", c.id, elapsed, c.title);
        if !in_time {
            println!("    time limit {:?} exceeded", c.limit.unwrap());
            unexpected.push(format!("criterion {} time", c.id));
        }
        for (name, _, detail) in failed {
            match KNOWN_GAPS.iter().find(|(k, _)| k == name) {
                Some((_, why)) => println!("    known gap `{name}` ({detail}): {why}"),
                None => {
                    println!("    failed `{name}`: {detail}");
                    unexpected.push(name.clone());
                }
            }
        }
    }
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("unexpected failures: {unexpected:?}");
        ExitCode::FAILURE
    }
}
