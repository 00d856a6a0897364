//! Reference polytopes shipped with the crate.
//!
//! * the five indecomposable deformed 3-permutahedra `S1, S2, S3, T1, T2`
//!   (three segments, two triangles), with their `φ(1,1)` table, fertility
//!   digraph and two composed 4-dimensional examples;
//! * eleven pairwise fertile indecomposable deformed 4-permutahedra
//!   `P1..P11` (one octahedron, four strawberries, six persimmons).

use serde::Deserialize;

use crate::arith::Rat;
use crate::submod::{Point, SetFunction};

const N3_INDECOMPOSABLES: &str = include_str!("../fixtures/n3_indecomposables.json");
const N3_PHI_TABLE: &str = include_str!("../fixtures/n3_phi_table.json");
const N3_FERTILITY: &str = include_str!("../fixtures/n3_fertility_digraph.json");
const N3_COMPOSITIONS: &str = include_str!("../fixtures/n3_compositions.json");
const N4_FAMILY: &str = include_str!("../fixtures/n4_family.json");

#[derive(Debug, Clone, Deserialize)]
pub struct NamedPolytope {
    pub name: String,
    pub vertices: Vec<Point>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct PolytopeList {
    pub n: usize,
    pub polytopes: Vec<NamedPolytope>,
}

impl PolytopeList {
    pub fn set_functions(&self) -> Vec<(String, SetFunction)> {
        self.polytopes
            .iter()
            .map(|p| {
                let f = SetFunction::from_vertices(self.n, &p.vertices)
                    .unwrap_or_else(|e| panic!("fixture {} is invalid: {e}", p.name));
                (p.name.clone(), f)
            })
            .collect()
    }
}

#[derive(Debug, Clone, Deserialize)]
pub struct PhiEntry {
    pub top: String,
    pub bottom: String,
    pub phi: Vec<Rat>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct PhiTable {
    pub n: usize,
    pub lambda: Rat,
    pub mu: Rat,
    pub entries: Vec<PhiEntry>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Digraph {
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Composition {
    pub name: String,
    pub top: String,
    pub bottom: String,
    pub bottom_shift: Vec<Rat>,
    pub vertices: Vec<Point>,
}

#[derive(Debug, Clone, Deserialize)]
struct Compositions {
    compositions: Vec<Composition>,
}

fn parse<T: serde::de::DeserializeOwned>(text: &str) -> T {
    serde_json::from_str(text).expect("bundled fixture parses")
}

pub fn n3_list() -> PolytopeList {
    parse(N3_INDECOMPOSABLES)
}

pub fn n4_list() -> PolytopeList {
    parse(N4_FAMILY)
}

/// `S1, S2, S3, T1, T2` in that order.
pub fn n3_indecomposables() -> Vec<(String, SetFunction)> {
    n3_list().set_functions()
}

pub fn n3_named(name: &str) -> SetFunction {
    n3_indecomposables()
        .into_iter()
        .find(|(n, _)| n == name)
        .map(|(_, f)| f)
        .unwrap_or_else(|| panic!("no fixture named {name}"))
}

pub fn s1() -> SetFunction {
    n3_named("S1")
}

pub fn s2() -> SetFunction {
    n3_named("S2")
}

pub fn s3() -> SetFunction {
    n3_named("S3")
}

pub fn t1() -> SetFunction {
    n3_named("T1")
}

pub fn t2() -> SetFunction {
    n3_named("T2")
}

/// `P1..P11` as set functions on four elements.
pub fn n4_family() -> Vec<SetFunction> {
    n4_list().set_functions().into_iter().map(|(_, f)| f).collect()
}

pub fn n3_phi_table() -> PhiTable {
    parse(N3_PHI_TABLE)
}

pub fn n3_fertility_digraph() -> Digraph {
    parse(N3_FERTILITY)
}

/// The square pyramid `S1 ⊻ (T1 + (0,−1,−1))` and the octahedron
/// `T2 ⊻ (T1 + (−1,−1,−1))`, as lifted vertex lists.
pub fn n3_compositions() -> Vec<Composition> {
    parse::<Compositions>(N3_COMPOSITIONS).compositions
}
