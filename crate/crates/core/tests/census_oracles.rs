mod common;

use common::*;
use ogt_core::canon::{canonical_code, canonical_code_by_degree_classes};
use ogt_core::census::{generate_tournaments, oriented_graphs, tournaments_in};

#[test]
fn oriented_graph_counts_match_labelled_dedup() {
    for n in 1..=5 {
        let lib = oriented_graphs(n).unwrap().len();
        assert_eq!(lib, brute_oriented_classes(n), "n={n}");
    }
}

#[test]
fn both_canonizers_give_the_same_census_sizes() {
    for n in 1..=7 {
        let a = generate_tournaments(n, canonical_code).unwrap();
        let b = generate_tournaments(n, canonical_code_by_degree_classes).unwrap();
        assert_eq!(a.len(), b.len(), "n={n}");
    }
}

#[test]
fn census_members_are_pairwise_non_isomorphic() {
    let census = generate_tournaments(5, canonical_code).unwrap();
    let members: Vec<_> = census.members().collect();
    for i in 0..members.len() {
        assert!(members[i].is_tournament());
        for j in i + 1..members.len() {
            assert!(!brute_isomorphic(&members[i], &members[j]), "{i} ~ {j}");
        }
    }
}

#[test]
fn disk_cache_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let fresh = tournaments_in(Some(dir.path()), 6).unwrap();
    let cached = tournaments_in(Some(dir.path()), 6).unwrap();
    assert_eq!(fresh.len(), 56);
    assert_eq!(fresh.to_bytes(), cached.to_bytes());
}
