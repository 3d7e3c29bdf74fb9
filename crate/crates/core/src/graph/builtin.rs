//! Named example graphs.
//!
//! Unless stated otherwise vertices are labeled `1..=n`. Hubs of wheels and
//! centers of stars are labeled `0`.

use super::polyhedra::{SNUB_CUBE, SNUB_DODECAHEDRON};
use super::Graph;
use crate::{Error, Result};

pub struct BuiltinInfo {
    pub name: &'static str,
    pub params: &'static str,
    pub about: &'static str,
}

pub const BUILTINS: &[BuiltinInfo] = &[
    BuiltinInfo { name: "cycle", params: "n>=3", about: "cycle C_n, edges (i, i+1) and (n, 1)" },
    BuiltinInfo { name: "path", params: "n>=1", about: "line graph with n vertices" },
    BuiltinInfo { name: "complete", params: "n>=1", about: "complete graph K_n" },
    BuiltinInfo { name: "wheel", params: "n>=3", about: "wheel W_n: hub 0 joined to the cycle 1..n" },
    BuiltinInfo { name: "star", params: "n>=0", about: "star S_n: center 0 joined to leaves 1..n" },
    BuiltinInfo {
        name: "sun",
        params: "a_1,...,a_n (n>=3, a_i>=0)",
        about: "cycle 1..n with a path of a_i extra vertices hanging at vertex i",
    },
    BuiltinInfo {
        name: "dumbbell",
        params: "a>=1,b>=1,n>=2",
        about: "K_{a+1} and K_{b+1} joined by a path of n vertices whose ends lie in the cliques; a+b+n vertices",
    },
    BuiltinInfo { name: "octahedron", params: "", about: "octahedron; i and 7-i are antipodal" },
    BuiltinInfo {
        name: "octahedron-antipodal",
        params: "",
        about: "octahedron with the antipodal pair 1,6 joined",
    },
    BuiltinInfo {
        name: "icosahedron",
        params: "",
        about: "icosahedron: pole 1, upper ring 2..6, lower ring 7..11, pole 12",
    },
    BuiltinInfo { name: "cube", params: "", about: "3-cube; vertex k+1 is the bit string k" },
    BuiltinInfo { name: "petersen", params: "", about: "outer cycle 1..5, inner pentagram 6..10" },
    BuiltinInfo { name: "utility", params: "", about: "K_{3,3} with parts 1..3 and 4..6" },
    BuiltinInfo {
        name: "prism",
        params: "",
        about: "triangular prism with each square split by a diagonal, a flag 2-sphere (isomorphic to the octahedron)",
    },
    BuiltinInfo { name: "bull", params: "", about: "triangle 1,2,3 with pendants 4 at 1 and 5 at 2" },
    BuiltinInfo { name: "house", params: "", about: "square 1,2,3,4 with roof vertex 5 over the edge 3,4" },
    BuiltinInfo { name: "kite", params: "", about: "two triangles sharing the edge 2,3" },
    BuiltinInfo { name: "gem", params: "", about: "path 1..4 coned off by vertex 5" },
    BuiltinInfo { name: "gate", params: "", about: "triangulated 2x1 ladder: 1-2-3 over 4-5-6 with diagonals 1-5, 2-6" },
    BuiltinInfo { name: "fly", params: "", about: "two triangles sharing the vertex 1 (butterfly)" },
    BuiltinInfo { name: "fork", params: "", about: "vertex 1 with leaves 2,3 and the path 1-4-5" },
    BuiltinInfo { name: "cricket", params: "", about: "triangle 1,2,3 with two pendants 4,5 at vertex 1" },
    BuiltinInfo { name: "dart", params: "", about: "kite with a pendant 5 at the degree-3 vertex 2" },
    BuiltinInfo { name: "lollipop", params: "[m>=1, n>=0]", about: "K_m with a path of n extra vertices; default m=4, n=1" },
    BuiltinInfo { name: "tetrahedron", params: "", about: "K_4" },
    BuiltinInfo { name: "hex", params: "", about: "hexagonal region: the wheel W_6" },
    BuiltinInfo { name: "hole", params: "", about: "triangulated annulus between the squares 1..4 and 5..8" },
    BuiltinInfo { name: "dihedral", params: "", about: "hexagonal prism C_6 x K_2" },
    BuiltinInfo { name: "snub-cube", params: "", about: "1-skeleton of the snub cube (24 vertices)" },
    BuiltinInfo {
        name: "snub-octahedron",
        params: "",
        about: "1-skeleton of the snub dodecahedron (60 vertices), the snub solid with Euler characteristic -10",
    },
    BuiltinInfo {
        name: "pants",
        params: "",
        about: "triangulated strip with two interior holes: a 2-manifold with three boundary circles",
    },
    BuiltinInfo {
        name: "c4-pyramid",
        params: "",
        about: "C_4 on 1..4 with a pyramid vertex 5 over the edge 1,2",
    },
    BuiltinInfo {
        name: "circle-h10",
        params: "",
        about: "order-10 graph homotopic to a circle with dimension 131/60",
    },
    BuiltinInfo {
        name: "circle-g15",
        params: "",
        about: "order-15 graph homotopic to a circle with dimension 15/7",
    },
];

pub fn builtin_names() -> impl Iterator<Item = &'static str> {
    BUILTINS.iter().map(|b| b.name)
}

/// Parameters used when a builtin is instantiated without explicit ones.
pub fn sample_params(name: &str) -> &'static [i64] {
    match name {
        "cycle" | "wheel" => &[6],
        "path" | "complete" | "star" => &[5],
        "sun" => &[1, 1, 1, 1],
        "dumbbell" => &[3, 4, 3],
        _ => &[],
    }
}

/// Every builtin at its sample parameters.
pub fn builtin_corpus() -> Vec<(&'static str, Graph)> {
    BUILTINS
        .iter()
        .map(|b| (b.name, builtin(b.name, sample_params(b.name)).expect("sample parameters are valid")))
        .collect()
}

fn bad(name: &str, reason: impl Into<String>) -> Error {
    Error::BadParams { name: name.to_string(), reason: reason.into() }
}

fn no_params(name: &str, params: &[i64]) -> Result<()> {
    if params.is_empty() {
        Ok(())
    } else {
        Err(bad(name, "takes no parameters"))
    }
}

fn one_param(name: &str, params: &[i64], min: i64) -> Result<usize> {
    match params {
        [n] if *n >= min => Ok(*n as usize),
        [_] => Err(bad(name, format!("parameter must be >= {min}"))),
        _ => Err(bad(name, "expects exactly one parameter")),
    }
}

fn cycle_edges(n: usize) -> Vec<(usize, usize)> {
    (1..=n).map(|i| (i, i % n + 1)).collect()
}

fn labeled(labels: Vec<i64>, edges: &[(i64, i64)]) -> Graph {
    Graph::new(&labels, edges).expect("builtin graphs are simple")
}

/// Constructs a named graph.
pub fn builtin(name: &str, params: &[i64]) -> Result<Graph> {
    let one = Graph::from_edges_one_based;
    let g = match name {
        "cycle" => {
            let n = one_param(name, params, 3)?;
            one(n, &cycle_edges(n))
        }
        "path" => {
            let n = one_param(name, params, 1)?;
            one(n, &(1..n).map(|i| (i, i + 1)).collect::<Vec<_>>())
        }
        "complete" => {
            let n = one_param(name, params, 1)?;
            complete(n)
        }
        "tetrahedron" => {
            no_params(name, params)?;
            complete(4)
        }
        "wheel" => {
            let n = one_param(name, params, 3)? as i64;
            let mut edges: Vec<(i64, i64)> = (1..=n).map(|i| (0, i)).collect();
            edges.extend((1..=n).map(|i| (i, i % n + 1)));
            labeled((0..=n).collect(), &edges)
        }
        "hex" => {
            no_params(name, params)?;
            builtin("wheel", &[6])?
        }
        "star" => {
            let n = one_param(name, params, 0)? as i64;
            let edges: Vec<(i64, i64)> = (1..=n).map(|i| (0, i)).collect();
            labeled((0..=n).collect(), &edges)
        }
        "sun" => sun(params)?,
        "dumbbell" => dumbbell(params)?,
        "octahedron" => {
            no_params(name, params)?;
            octahedron(false)
        }
        "octahedron-antipodal" => {
            no_params(name, params)?;
            octahedron(true)
        }
        "icosahedron" => {
            no_params(name, params)?;
            let mut e = Vec::new();
            for i in 0..5 {
                let (u, un) = (2 + i, 2 + (i + 1) % 5);
                let (l, ln) = (7 + i, 7 + (i + 1) % 5);
                e.extend([(1, u), (u, un), (l, ln), (l, 12), (u, l), (un, l)]);
            }
            one(12, &e)
        }
        "cube" => {
            no_params(name, params)?;
            let mut e = Vec::new();
            for k in 0..8usize {
                for bit in [1, 2, 4] {
                    if k & bit == 0 {
                        e.push((k + 1, (k | bit) + 1));
                    }
                }
            }
            one(8, &e)
        }
        "petersen" => {
            no_params(name, params)?;
            let mut e = Vec::new();
            for i in 0..5 {
                e.push((1 + i, 1 + (i + 1) % 5));
                e.push((6 + i, 6 + (i + 2) % 5));
                e.push((1 + i, 6 + i));
            }
            one(10, &e)
        }
        "utility" => {
            no_params(name, params)?;
            let e: Vec<_> = (1..=3).flat_map(|a| (4..=6).map(move |b| (a, b))).collect();
            one(6, &e)
        }
        "prism" => {
            no_params(name, params)?;
            one(
                6,
                &[(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4), (1, 4), (2, 5), (3, 6), (1, 5), (2, 6), (3, 4)],
            )
        }
        "bull" => fixed(name, params, 5, &[(1, 2), (2, 3), (3, 1), (1, 4), (2, 5)])?,
        "house" => fixed(name, params, 5, &[(1, 2), (2, 3), (3, 4), (4, 1), (3, 5), (4, 5)])?,
        "kite" => fixed(name, params, 4, &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)])?,
        "gem" => fixed(name, params, 5, &[(1, 2), (2, 3), (3, 4), (1, 5), (2, 5), (3, 5), (4, 5)])?,
        "gate" => fixed(
            name,
            params,
            6,
            &[(1, 2), (2, 3), (4, 5), (5, 6), (1, 4), (2, 5), (3, 6), (1, 5), (2, 6)],
        )?,
        "fly" => fixed(name, params, 5, &[(1, 2), (1, 3), (2, 3), (1, 4), (1, 5), (4, 5)])?,
        "fork" => fixed(name, params, 5, &[(1, 2), (1, 3), (1, 4), (4, 5)])?,
        "cricket" => fixed(name, params, 5, &[(1, 2), (2, 3), (3, 1), (1, 4), (1, 5)])?,
        "dart" => fixed(name, params, 5, &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (2, 5)])?,
        "lollipop" => {
            let (m, n) = match params {
                [] => (4, 1),
                [m, n] if *m >= 1 && *n >= 0 => (*m as usize, *n as usize),
                _ => return Err(bad(name, "expects m>=1, n>=0")),
            };
            let mut e: Vec<(usize, usize)> =
                (1..=m).flat_map(|a| (a + 1..=m).map(move |b| (a, b))).collect();
            e.extend((0..n).map(|k| (m + k, m + k + 1)));
            one(m + n, &e)
        }
        "hole" => {
            no_params(name, params)?;
            let mut e = Vec::new();
            for i in 1..=4 {
                let next = i % 4 + 1;
                e.extend([(i, next), (i + 4, next + 4), (i, i + 4), (i, next + 4)]);
            }
            one(8, &e)
        }
        "dihedral" => {
            no_params(name, params)?;
            let mut e = Vec::new();
            for i in 1..=6 {
                let next = i % 6 + 1;
                e.extend([(i, next), (i + 6, next + 6), (i, i + 6)]);
            }
            one(12, &e)
        }
        "snub-cube" => {
            no_params(name, params)?;
            one(24, &SNUB_CUBE)
        }
        "snub-octahedron" | "snub-dodecahedron" => {
            no_params(name, params)?;
            one(60, &SNUB_DODECAHEDRON)
        }
        "pants" => {
            no_params(name, params)?;
            pants()
        }
        "c4-pyramid" => fixed(name, params, 5, &[(1, 2), (2, 3), (3, 4), (4, 1), (1, 5), (2, 5)])?,
        "circle-h10" => fixed(name, params, 10, &CIRCLE_H10)?,
        "circle-g15" => fixed(name, params, 15, &CIRCLE_G15)?,
        _ => return Err(Error::UnknownBuiltin(name.to_string())),
    };
    Ok(g)
}

fn fixed(name: &str, params: &[i64], n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    no_params(name, params)?;
    Ok(Graph::from_edges_one_based(n, edges))
}

fn complete(n: usize) -> Graph {
    let e: Vec<_> = (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))).collect();
    Graph::from_edges_one_based(n, &e)
}

fn octahedron(with_axis: bool) -> Graph {
    let mut e: Vec<_> =
        (1..=6).flat_map(|a| (a + 1..=6).map(move |b| (a, b))).filter(|&(a, b)| a + b != 7).collect();
    if with_axis {
        e.push((1, 6));
    }
    Graph::from_edges_one_based(6, &e)
}

fn sun(params: &[i64]) -> Result<Graph> {
    if params.len() < 3 || params.iter().any(|&a| a < 0) {
        return Err(bad("sun", "needs at least three ray lengths, all >= 0"));
    }
    let n = params.len();
    let mut edges = cycle_edges(n);
    let mut next = n + 1;
    for (i, &a) in params.iter().enumerate() {
        let mut prev = i + 1;
        for _ in 0..a {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Ok(Graph::from_edges_one_based(next - 1, &edges))
}

fn dumbbell(params: &[i64]) -> Result<Graph> {
    let (a, b, n) = match params {
        [a, b, n] if *a >= 1 && *b >= 1 && *n >= 2 => (*a as usize, *b as usize, *n as usize),
        _ => return Err(bad("dumbbell", "expects a>=1, b>=1, n>=2")),
    };
    // clique A: 1..=a plus path start a+1; path a+1..=a+n; clique B: path end a+n plus a+n+1..=a+n+b
    let first = a + 1;
    let last = a + n;
    let mut e = Vec::new();
    let clique_a: Vec<usize> = (1..=a).chain(std::iter::once(first)).collect();
    let clique_b: Vec<usize> = std::iter::once(last).chain(last + 1..=last + b).collect();
    for c in [&clique_a, &clique_b] {
        for (k, &x) in c.iter().enumerate() {
            for &y in &c[k + 1..] {
                e.push((x, y));
            }
        }
    }
    e.extend((first..last).map(|i| (i, i + 1)));
    Ok(Graph::from_edges_one_based(a + b + n, &e))
}

fn pants() -> Graph {
    let (w, h) = (9usize, 5usize);
    let holes = [(2usize, 2usize), (6, 2)];
    let id = |i: usize, j: usize| j * w + i;
    let mut edges = Vec::new();
    for j in 0..h {
        for i in 0..w {
            if i + 1 < w {
                edges.push((id(i, j), id(i + 1, j)));
            }
            if j + 1 < h {
                edges.push((id(i, j), id(i, j + 1)));
            }
            if i + 1 < w && j + 1 < h {
                edges.push((id(i, j), id(i + 1, j + 1)));
            }
        }
    }
    let full = Graph::from_edges(w * h, &edges);
    let keep: Vec<usize> = (0..w * h).filter(|&v| !holes.iter().any(|&(i, j)| id(i, j) == v)).collect();
    let g = full.induced(&keep);
    g.relabel_dense()
}

// Reconstructed from the invariants they are meant to exhibit; see the
// `circle-h10` and `circle-g15` topologies in the topology library.
const CIRCLE_H10: [(usize, usize); 17] = [
    (1, 3), (1, 9), (1, 10), (2, 3), (3, 4), (3, 5), (3, 9), (3, 10), (4, 5), (5, 6), (5, 8), (6, 7), (6, 8), (6, 10), (7, 10), (8, 10), (9, 10),
];
const CIRCLE_G15: [(usize, usize); 27] = [
    (1, 4), (2, 4), (2, 11), (2, 12), (2, 13), (2, 14), (2, 15), (3, 4), (4, 5), (4, 7), (4, 13), (4, 14), (5, 6), (5, 7), (6, 7), (7, 8), (7, 9), (8, 9), (9, 10), (9, 15), (11, 12), (11, 13), (11, 15), (12, 13), (12, 14), (12, 15), (13, 14),
];

impl Graph {
    /// Relabels vertices `1..=n` in ascending order of their current labels.
    pub fn relabel_dense(&self) -> Graph {
        Graph::from_index_edges((1..=self.order() as i64).collect(), self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::enumerate_cliques;

    fn chi(g: &Graph) -> i64 {
        enumerate_cliques(g, None).euler_characteristic()
    }

    #[test]
    fn every_builtin_constructs() {
        for info in BUILTINS {
            let g = builtin(info.name, sample_params(info.name)).unwrap_or_else(|e| panic!("{}: {e}", info.name));
            assert!(g.order() > 0, "{}", info.name);
        }
    }

    #[test]
    fn sizes_and_euler_characteristics() {
        let cases: &[(&str, &[i64], usize, usize, i64)] = &[
            ("cycle", &[6], 6, 6, 0),
            ("petersen", &[], 10, 15, -5),
            ("utility", &[], 6, 9, -3),
            ("octahedron", &[], 6, 12, 2),
            ("octahedron-antipodal", &[], 6, 13, 1),
            ("icosahedron", &[], 12, 30, 2),
            ("cube", &[], 8, 12, -4),
            ("prism", &[], 6, 12, 2),
            ("snub-cube", &[], 24, 60, -4),
            ("snub-octahedron", &[], 60, 150, -10),
            ("dihedral", &[], 12, 18, -6),
            ("hole", &[], 8, 16, 0),
            ("house", &[], 5, 6, 0),
            ("sun", &[1, 1, 1, 1], 8, 8, 0),
            ("dumbbell", &[3, 4, 3], 10, 6 + 10 + 2, 1),
            ("pants", &[], 43, 0, -1),
        ];
        for &(name, params, v, e, x) in cases {
            let g = builtin(name, params).unwrap();
            assert_eq!(g.order(), v, "{name}");
            if e > 0 {
                assert_eq!(g.size(), e, "{name}");
            }
            assert_eq!(chi(&g), x, "{name}");
        }
    }

    #[test]
    fn cycle_has_consecutive_edges() {
        let c6 = builtin("cycle", &[6]).unwrap();
        assert_eq!(c6.edge_labels(), vec![(1, 2), (1, 6), (2, 3), (3, 4), (4, 5), (5, 6)]);
    }

    #[test]
    fn rejects_bad_names_and_params() {
        assert!(matches!(builtin("nonesuch", &[]), Err(Error::UnknownBuiltin(_))));
        assert!(matches!(builtin("cycle", &[2]), Err(Error::BadParams { .. })));
        assert!(matches!(builtin("petersen", &[1]), Err(Error::BadParams { .. })));
        assert!(matches!(builtin("dumbbell", &[3, 4]), Err(Error::BadParams { .. })));
        assert!(matches!(builtin("sun", &[1, 1]), Err(Error::BadParams { .. })));
    }
}
