mod common;

use common::*;
use kmosaic::generator::{count_mosaics, iterate_mosaics};
use kmosaic::invariants::{jones_polynomial, kauffman_bracket, writhe as lib_writhe};
use kmosaic::traversal::{number_of_components, strands};
use kmosaic::Mosaic;

const FIVE_TWO: [[i64; 5]; 5] =
    [[0, 2, 1, 0, 0], [2, 9, 10, 1, 0], [3, 10, 9, 10, 1], [0, 3, 7, 8, 4], [0, 0, 3, 4, 0]];

fn five_two() -> Mosaic {
    Mosaic::new(&FIVE_TWO).unwrap()
}

fn flat(rows: &[[i64; 5]; 5]) -> Vec<u8> {
    rows.iter().flatten().map(|&t| t as u8).collect()
}

#[test]
fn counts_match_brute_force_and_backtracking() {
    assert_eq!(brute_force_count(1), 1);
    assert_eq!(count_mosaics(1), 1);
    assert_eq!(brute_force_count(2), 2);
    assert_eq!(count_mosaics(2), 2);
    for n in 2..=4 {
        assert_eq!(count_mosaics(n), backtracking_count(n), "n = {n}");
    }
    assert_eq!(backtracking_count(3), 22);
    assert_eq!(backtracking_count(4), 2594);
}

#[test]
fn enumeration_visits_exactly_the_suitably_connected_mosaics() {
    let mut seen = 0;
    iterate_mosaics(
        3,
        |m| {
            assert!(suitably_connected(3, &raw(m)));
            seen += 1;
        },
        None,
    );
    assert_eq!(seen, backtracking_count(3));
}

#[test]
fn five_two_tile_table_is_forced() {
    let tiles = flat(&FIVE_TWO);
    assert!(suitably_connected(5, &tiles));
    assert_eq!(components(5, &tiles).len(), 1);
    assert_eq!(components(5, &tiles)[0].len(), 24);

    // Any other quarter-arc orientation for T1 breaks suitable connectivity.
    for alt in [&[(1u8, 2u8)][..], &[(0, 1)], &[(0, 3)]] {
        let mut pairs = PAIRS;
        pairs[1] = alt;
        let ok = (0..25).all(|cell| {
            (0..4u8).all(|s| {
                let has = |t: u8, s: u8| pairs[t as usize].iter().any(|&(a, b)| a == s || b == s);
                let (r, c) = ((cell / 5) as isize, (cell % 5) as isize);
                let (dr, dc) = [(-1, 0), (0, 1), (1, 0), (0, -1)][s as usize];
                let (nr, nc) = (r + dr, c + dc);
                let here = has(tiles[cell], s);
                if !(0..5).contains(&nr) || !(0..5).contains(&nc) {
                    !here
                } else {
                    here == has(tiles[(nr * 5 + nc) as usize], (s + 2) % 4)
                }
            })
        });
        assert!(!ok, "{alt:?}");
    }
}

#[test]
fn five_two_double_arc_pairing_is_forced() {
    // Swapping the arc pairs of the double-arc tiles splits the knot.
    let tiles = flat(&FIVE_TWO);
    let swapped: Vec<u8> = tiles
        .iter()
        .map(|&t| match t {
            7 => 8,
            8 => 7,
            t => t,
        })
        .collect();
    assert!(suitably_connected(5, &swapped));
    assert!(components(5, &swapped).len() >= 2);
    assert_eq!(number_of_components(&five_two()).unwrap(), 1);
}

#[test]
fn component_counts_agree_with_independent_tracer() {
    iterate_mosaics(
        4,
        |m| {
            let ours = strands(m).unwrap();
            let theirs = components(4, &raw(m));
            assert_eq!(ours.len(), theirs.len(), "{m}");
            for (a, b) in ours.iter().zip(&theirs) {
                assert_eq!(a.len(), b.len(), "{m}");
            }
        },
        None,
    );
}

#[test]
fn bracket_matches_skein_recursion_on_small_diagrams() {
    let mut checked = 0;
    iterate_mosaics(
        4,
        |m| {
            if m.number_of_crossings() > 3 {
                return;
            }
            let tiles = raw(m);
            assert_eq!(poly(&kauffman_bracket(m).unwrap()), skein_bracket(4, &tiles), "{m}");
            assert_eq!(lib_writhe(m).unwrap(), writhe(4, &tiles), "{m}");
            assert_eq!(poly(&jones_polynomial(m).unwrap()), jones(4, &tiles), "{m}");
            checked += 1;
        },
        None,
    );
    assert!(checked > 1000);
}

#[test]
fn five_two_jones_matches_skein_recursion() {
    let expected = Poly::from([(-4, 1), (-8, -1), (-12, 2), (-16, -1), (-20, 1), (-24, -1)]);
    assert_eq!(jones(5, &flat(&FIVE_TWO)), expected);
    assert_eq!(poly(&jones_polynomial(&five_two()).unwrap()), expected);
}

#[test]
fn four_mosaic_knots_are_unknots_or_trefoils() {
    // t + t^3 - t^4 and its mirror, in quarter powers
    let right = Poly::from([(4, 1), (12, 1), (16, -1)]);
    let left = Poly::from([(-4, 1), (-12, 1), (-16, -1)]);
    let unknot = Poly::from([(0, 1)]);
    let (mut trefoils, mut knots) = (0, 0);
    iterate_mosaics(
        4,
        |m| {
            if number_of_components(m).unwrap() != 1 {
                return;
            }
            knots += 1;
            let v = poly(&jones_polynomial(m).unwrap());
            assert!(v == unknot || v == left || v == right, "{m}\n{v:?}");
            trefoils += usize::from(v != unknot);
        },
        None,
    );
    assert!(knots > 0 && trefoils > 0);
}

#[test]
fn disjoint_circle_multiplies_jones_by_loop_value() {
    let mut rows = vec![vec![0i64; 7]; 7];
    for (r, row) in FIVE_TWO.iter().enumerate() {
        rows[r][..5].copy_from_slice(row);
    }
    rows[5][5] = 2;
    rows[5][6] = 1;
    rows[6][5] = 3;
    rows[6][6] = 4;
    let split = Mosaic::new(&rows).unwrap();
    assert_eq!(number_of_components(&split).unwrap(), 2);
    // -t^(1/2) - t^(-1/2)
    let circle = Poly::from([(2, -1), (-2, -1)]);
    let expected = mul(&circle, &poly(&jones_polynomial(&five_two()).unwrap()));
    assert_eq!(poly(&jones_polynomial(&split).unwrap()), expected);
    assert_eq!(jones(7, &raw(&split)), expected);
}

#[test]
fn corpus_jones_matches_skein_recursion() {
    for m in corpus(40, 6) {
        let n = m.dim();
        assert_eq!(poly(&jones_polynomial(&m).unwrap()), jones(n, &raw(&m)), "{m}");
    }
}
