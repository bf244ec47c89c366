//! Concrete graphs: constructions of named distance-regular graphs, BFS
//! distances and a brute-force distance-regularity verifier.

mod constructors;
mod graph;

pub use constructors::{
    atlas, by_name, crown_graph, cycle_graph, halved_cube, hamming_graph, heawood_graph, hypercube, johnson_graph,
    kneser_graph_73, petersen_graph, AtlasEntry, ATLAS_NAMES, MAX_VERTICES,
};
pub use graph::{
    distance_power, distances, parse_adjacency_text, verify_drg, ConcreteGraph, DistanceMatrix, DistancePower,
};
