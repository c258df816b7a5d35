mod common;

use common::*;
use ogt_core::construct::{power_path, special_t, SpecialTournament};
use ogt_core::layered::{check_layers, find_gadget_pair, glued_paths, q_gadget, q_terminals};
use ogt_core::tau::tau;

fn exact(h: &ogt_core::OrientedGraph, max_k: usize) -> usize {
    let r = tau(h, max_k).unwrap();
    assert!(r.is_exact());
    for w in r.witnesses.values() {
        assert_eq!(brute_hom_count(h, w), 0);
    }
    r.tau
}

#[test]
fn cube_paths_small_values() {
    let got: Vec<usize> = (4..=6).map(|k| exact(&power_path(k, 3).unwrap(), 8)).collect();
    assert_eq!(got, [4, 5, 6]);
}

#[test]
fn short_glued_paths() {
    let a = glued_paths(&[1, 2]).unwrap();
    let b = glued_paths(&[1, 2, 3]).unwrap();
    assert!(check_layers(&a, 3).unwrap().is_ok());
    assert!(check_layers(&b, 3).unwrap().is_ok());
    assert_eq!((brute_longest_path(&a), exact(&a, 7)), (3, 4));
    assert_eq!((brute_longest_path(&b), exact(&b, 7)), (4, 6));
}

#[test]
fn tc_has_no_gadget_pair_but_receives_q3() {
    let tc = special_t(SpecialTournament::C);
    assert!(find_gadget_pair(&tc).is_none());
    // direct enumeration of Q_3 -> T_c, counting maps with the named terminals
    let q = q_gadget(3).unwrap();
    let (vs, vt) = q_terminals(3);
    let n = q.order();
    let arcs: Vec<(usize, usize)> = q.arcs().map(|a| (a.source, a.target)).collect();
    let mut any = false;
    let mut named = false;
    let mut map = vec![0usize; n];
    'outer: loop {
        if arcs.iter().all(|&(u, v)| tc.has_arc(map[u], map[v])) {
            any = true;
            named |= map[vs] == 0 && map[vt] == 3;
        }
        for slot in map.iter_mut() {
            *slot += 1;
            if *slot < 5 {
                continue 'outer;
            }
            *slot = 0;
        }
        break;
    }
    assert!(any);
    assert!(!named);
}
