//! Named sub-bases from the worked examples.

use super::SubBasis;
use crate::graph::builtin;
use crate::{Error, Result};

pub struct LibraryEntry {
    pub name: &'static str,
    pub graph: &'static str,
    pub params: &'static [i64],
    pub about: &'static str,
    pub sets: &'static [&'static [i64]],
}

pub const LIBRARY: &[LibraryEntry] = &[
    LibraryEntry {
        name: "c6-windows",
        graph: "cycle",
        params: &[6],
        about: "six windows of three consecutive vertices on C_6; nerve C_6",
        sets: &[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5], &[4, 5, 6], &[5, 6, 1], &[6, 1, 2]],
    },
    LibraryEntry {
        name: "c6-thirds",
        graph: "cycle",
        params: &[6],
        about: "three windows of four vertices on C_6; the nerve is a triangle, not a circle",
        sets: &[&[1, 2, 3, 4], &[3, 4, 5, 6], &[5, 6, 1, 2]],
    },
    LibraryEntry {
        name: "c6-edges",
        graph: "cycle",
        params: &[6],
        about: "the six edges of C_6; pairwise intersections are points, so the nerve has no edges",
        sets: &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[5, 6], &[6, 1]],
    },
    LibraryEntry {
        name: "c4-windows",
        graph: "cycle",
        params: &[4],
        about: "four windows of three consecutive vertices on C_4; nerve C_4 with all weights 1",
        sets: &[&[1, 2, 3], &[2, 3, 4], &[3, 4, 1], &[4, 1, 2]],
    },
    LibraryEntry {
        name: "c5-windows",
        graph: "cycle",
        params: &[5],
        about: "one window of four and three windows of three vertices on C_5; nerve C_4 with all weights 1",
        sets: &[&[1, 2, 3, 4], &[3, 4, 5], &[4, 5, 1], &[5, 1, 2]],
    },
    LibraryEntry {
        name: "c4-pyramid",
        graph: "c4-pyramid",
        params: &[],
        about: "triangle 1,2,5 and three paths around the square; spectrum (2,1,1,1)",
        sets: &[&[1, 2, 5], &[2, 3, 5], &[2, 3, 4], &[1, 3, 4, 5]],
    },
    LibraryEntry {
        name: "c4-pyramid-short",
        graph: "c4-pyramid",
        params: &[],
        about: "as `c4-pyramid` but with the path 4,1,5 in place of 3,4,1,5; the nerve is a path",
        sets: &[&[1, 2, 5], &[2, 3, 5], &[2, 3, 4], &[1, 4, 5]],
    },
    LibraryEntry {
        name: "c4-pyramid-alt",
        graph: "c4-pyramid",
        params: &[],
        about: "another valid sub-basis on the pyramid over an edge of C_4",
        sets: &[&[1, 2, 3], &[2, 3, 4], &[1, 3, 4, 5], &[1, 2, 5]],
    },
    LibraryEntry {
        name: "sun-c4",
        graph: "sun",
        params: &[1, 2, 3, 0],
        about: "each ray of the sun together with the two cycle neighbors of its root; nerve C_4",
        sets: &[&[4, 1, 2, 5], &[1, 2, 3, 6, 7], &[2, 3, 4, 8, 9, 10], &[3, 4, 1]],
    },
    LibraryEntry {
        name: "icosahedron-octahedral",
        graph: "icosahedron",
        params: &[],
        about: "six unions of two adjacent unit balls along a perfect matching; nerve is the octahedron",
        sets: &[
            &[1, 2, 3, 4, 5, 6, 7, 11],
            &[1, 2, 3, 4, 7, 8, 11, 12],
            &[1, 3, 4, 5, 6, 8, 9, 10],
            &[1, 2, 5, 6, 9, 10, 11, 12],
            &[3, 4, 5, 7, 8, 9, 10, 12],
            &[2, 6, 7, 8, 9, 10, 11, 12],
        ],
    },
    LibraryEntry {
        name: "circle-h10",
        graph: "circle-h10",
        params: &[],
        about: "six elements with nerve C_6 and weights 1,2,1,2,1,3",
        sets: &[&[1, 2, 3, 4], &[3, 4, 5], &[4, 5, 8], &[5, 6, 7, 8, 10], &[3, 8, 10], &[1, 3, 9, 10]],
    },
    LibraryEntry {
        name: "circle-g15",
        graph: "circle-g15",
        params: &[],
        about: "six elements with nerve C_6 and weights 1,2,1,2,1,3",
        sets: &[&[1, 2, 3, 4, 5], &[4, 5, 6, 7], &[6, 7, 8], &[7, 8, 9], &[2, 8, 9, 10, 15], &[2, 4, 11, 12, 13, 14, 15]],
    },
];

pub fn library_names() -> impl Iterator<Item = &'static str> {
    LIBRARY.iter().map(|e| e.name)
}

pub fn library_topology(name: &str) -> Result<SubBasis> {
    let entry = LIBRARY
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownBuiltin(name.to_string()))?;
    SubBasis::from_sets(builtin(entry.graph, entry.params)?, entry.sets)
}
