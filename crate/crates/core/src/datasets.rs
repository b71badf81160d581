//! Bundled example networks.

use crate::graph::{read_edge_list, Graph};

/// Zachary's karate club, nodes labelled `1..=34`.
pub const KARATE_EDGE_LIST: &str = include_str!("../../../data/karate.txt");

pub fn karate_club() -> Graph {
    read_edge_list(KARATE_EDGE_LIST.as_bytes()).expect("bundled karate club edge list parses")
}
