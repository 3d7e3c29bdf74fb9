//! The two homeomorphic circle-like graphs of orders 10 and 15.

use grafotop::fixedpoint::{fixed_invariant_set, nerve_automorphisms};
use grafotop::graph::{builtin, is_isomorphic};
use grafotop::homeo::{check_homeomorphic, check_continuous, TopologicalGraph};
use grafotop::homotopy::homotopy_equivalent;
use grafotop::invariants::{dimension, euler_characteristic};
use grafotop::topology::{dimension_summary, library_topology, nerve, validate};
use grafotop::Rational;

fn r(s: &str) -> Rational {
    s.parse().unwrap()
}

fn spectrum() -> Vec<Rational> {
    [1, 2, 1, 2, 1, 3].iter().map(|&k| Rational::from_int(k)).collect()
}

#[test]
fn host_dimensions() {
    assert_eq!(dimension(&builtin("circle-h10", &[]).unwrap()), r("131/60"));
    assert_eq!(dimension(&builtin("circle-g15", &[]).unwrap()), r("15/7"));
}

#[test]
fn both_topologies_are_valid_with_cyclic_spectrum() {
    let cycle = builtin("cycle", &[6]).unwrap();
    for (name, order) in [("circle-h10", 10), ("circle-g15", 15)] {
        let b = library_topology(name).unwrap();
        assert_eq!(b.host().order(), order);
        assert!(validate(&b).is_valid(), "{name}");
        let s = dimension_summary(&b);
        assert_eq!(s.spectrum, spectrum(), "{name}");
        assert_eq!(s.topological_dimension, r("10/6"));
        let n = nerve(&b);
        // elements are linked around the ring in index order
        assert_eq!(n.graph.edge_labels().len(), 6);
        for i in 0..6 {
            assert!(n.graph.has_edge(i, (i + 1) % 6), "{name}: {i}");
        }
        assert!(is_isomorphic(&n.graph, &cycle, None, None).is_some());
        assert_eq!(euler_characteristic(b.host()), 0);
    }
}

#[test]
fn weighted_nerves_match_and_graphs_are_homeomorphic() {
    let h = TopologicalGraph::new(library_topology("circle-h10").unwrap()).unwrap();
    let g = TopologicalGraph::new(library_topology("circle-g15").unwrap()).unwrap();
    let (nh, ng) = (h.nerve(), g.nerve());
    assert!(is_isomorphic(&nh.graph, &ng.graph, Some(&nh.weights), Some(&ng.weights)).is_some());
    let map = check_homeomorphic(&h, &g).unwrap().expect("homeomorphic");
    assert!(check_continuous(&map));
    assert!(check_continuous(&map.inverse().unwrap()));
    assert!(!homotopy_equivalent(h.graph(), g.graph()).is_no());
}

#[test]
fn nerve_symmetry_and_invariant_family() {
    let t = TopologicalGraph::new(library_topology("circle-h10").unwrap()).unwrap();
    let autos = nerve_automorphisms(&t.nerve());
    // weights 1,2,1,2,1,3 around the ring: identity and the reflection through the weight-3 node
    assert_eq!(autos.len(), 2);
    let reflection = &autos[1];
    assert_eq!(reflection.permutation, vec![4, 3, 2, 1, 0, 5]);
    let found = fixed_invariant_set(&t, reflection).unwrap().expect("L = 2 on the nerve forces a fixed clique");
    assert_eq!(found.lefschetz, 2);
    // both nodes on the mirror axis are fixed; the scan returns the first
    assert_eq!(found.nodes, vec![2]);
}
