//! Independent reference implementations used to check the library.
//!
//! Nothing here calls into the library's traversal, bracket or enumeration
//! code; tiles are plain `u8` values and sides are `0 = Top, 1 = Right,
//! 2 = Bottom, 3 = Left`.

#![allow(dead_code)]

use std::collections::BTreeMap;

use kmosaic::generator::{random_mosaic, GenerationSpec};
use kmosaic::invariants::LaurentPoly;
use kmosaic::Mosaic;

pub type Poly = BTreeMap<i64, i128>;

/// Strand pairings per tile, written out from the tile pictures.
pub const PAIRS: [&[(u8, u8)]; 11] = [
    &[],
    &[(2, 3)],
    &[(1, 2)],
    &[(0, 1)],
    &[(0, 3)],
    &[(1, 3)],
    &[(0, 2)],
    &[(0, 1), (2, 3)],
    &[(0, 3), (1, 2)],
    &[(0, 2), (1, 3)],
    &[(0, 2), (1, 3)],
];

/// The pairing that passes over at a crossing: horizontal for 9, vertical for 10.
pub fn over_pair(t: u8) -> (u8, u8) {
    match t {
        9 => (1, 3),
        10 => (0, 2),
        _ => panic!("tile {t} is not a crossing"),
    }
}

pub fn connects(t: u8, s: u8) -> bool {
    PAIRS[t as usize].iter().any(|&(a, b)| a == s || b == s)
}

pub fn partner(t: u8, s: u8) -> Option<u8> {
    PAIRS[t as usize].iter().find_map(|&(a, b)| {
        if a == s {
            Some(b)
        } else if b == s {
            Some(a)
        } else {
            None
        }
    })
}

fn delta(s: u8) -> (isize, isize) {
    [(-1, 0), (0, 1), (1, 0), (0, -1)][s as usize]
}

fn neighbor(n: usize, cell: usize, s: u8) -> Option<usize> {
    let (dr, dc) = delta(s);
    let r = (cell / n) as isize + dr;
    let c = (cell % n) as isize + dc;
    (r >= 0 && c >= 0 && (r as usize) < n && (c as usize) < n).then(|| r as usize * n + c as usize)
}

pub fn suitably_connected(n: usize, tiles: &[u8]) -> bool {
    (0..n * n).all(|cell| {
        (0..4).all(|s| {
            let here = connects(tiles[cell], s);
            match neighbor(n, cell, s) {
                Some(q) => here == connects(tiles[q], (s + 2) % 4),
                None => !here,
            }
        })
    })
}

/// One pass through a tile: `(cell, entry side, exit side)`.
pub type Visit = (usize, u8, u8);

/// Trace every component. Each starts at the first untraced strand in
/// row-major order (pairings in Top, Right, Bottom, Left order) and leaves
/// through the later side of that pairing.
pub fn components(n: usize, tiles: &[u8]) -> Vec<Vec<Visit>> {
    assert!(suitably_connected(n, tiles));
    let mut used = vec![[false; 4]; n * n];
    let mut out = Vec::new();
    for cell in 0..n * n {
        for &(a, _) in PAIRS[tiles[cell] as usize] {
            if used[cell][a as usize] {
                continue;
            }
            let mut comp = Vec::new();
            let (mut here, mut entry) = (cell, a);
            loop {
                let exit = partner(tiles[here], entry).unwrap();
                used[here][entry as usize] = true;
                used[here][exit as usize] = true;
                comp.push((here, entry, exit));
                here = neighbor(n, here, exit).unwrap();
                entry = (exit + 2) % 4;
                if here == cell && entry == a {
                    break;
                }
            }
            out.push(comp);
        }
    }
    out
}

pub fn add(p: &Poly, q: &Poly) -> Poly {
    let mut out = p.clone();
    for (&e, &c) in q {
        *out.entry(e).or_insert(0) += c;
    }
    out.retain(|_, c| *c != 0);
    out
}

pub fn mul(p: &Poly, q: &Poly) -> Poly {
    let mut out = Poly::new();
    for (&e1, &c1) in p {
        for (&e2, &c2) in q {
            *out.entry(e1 + e2).or_insert(0) += c1 * c2;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

pub fn mono(c: i128, e: i64) -> Poly {
    Poly::from([(e, c)])
}

/// Kauffman bracket by the skein relation `<X> = A <A-smoothing> + A^-1 <B-smoothing>`.
///
/// Rotating the over-strand counterclockwise sweeps the two A regions; the
/// A-smoothing opens a channel between them. For a horizontal over-strand the
/// A regions are the upper-right and lower-left quadrants, so the A-smoothing
/// is the arc pair Top-Left / Right-Bottom (tile 8). For a vertical
/// over-strand it is Top-Right / Bottom-Left (tile 7).
pub fn skein_bracket(n: usize, tiles: &[u8]) -> Poly {
    match tiles.iter().position(|&t| t == 9 || t == 10) {
        None => {
            let loops = components(n, tiles).len();
            let delta = Poly::from([(2, -1), (-2, -1)]);
            let mut acc = mono(1, 0);
            for _ in 1..loops {
                acc = mul(&acc, &delta);
            }
            acc
        }
        Some(i) => {
            let (a_tile, b_tile) = if tiles[i] == 9 { (8, 7) } else { (7, 8) };
            let mut a = tiles.to_vec();
            a[i] = a_tile;
            let mut b = tiles.to_vec();
            b[i] = b_tile;
            add(&mul(&mono(1, 1), &skein_bracket(n, &a)), &mul(&mono(1, -1), &skein_bracket(n, &b)))
        }
    }
}

/// Sum of crossing signs with the right-hand rule, computed in y-up coordinates.
pub fn writhe(n: usize, tiles: &[u8]) -> i64 {
    let mut dirs: BTreeMap<usize, [Option<(isize, isize)>; 2]> = BTreeMap::new();
    for comp in components(n, tiles) {
        for (cell, entry, exit) in comp {
            let t = tiles[cell];
            if t != 9 && t != 10 {
                continue;
            }
            let (op, oq) = over_pair(t);
            let is_over = (entry == op && exit == oq) || (entry == oq && exit == op);
            let (dr, dc) = delta(exit);
            dirs.entry(cell).or_default()[usize::from(!is_over)] = Some((dc, -dr));
        }
    }
    dirs.values()
        .map(|[o, u]| {
            let ((ox, oy), (ux, uy)) = (o.unwrap(), u.unwrap());
            if ox * uy - oy * ux > 0 {
                1
            } else {
                -1
            }
        })
        .sum()
}

/// Jones polynomial in quarter powers of `t`: `(-A^3)^-w <D>` with `A = t^(-1/4)`.
pub fn jones(n: usize, tiles: &[u8]) -> Poly {
    let w = writhe(n, tiles);
    let sign = if w % 2 == 0 { 1 } else { -1 };
    let normalized = mul(&mono(sign, -3 * w), &skein_bracket(n, tiles));
    normalized.into_iter().map(|(e, c)| (-e, c)).collect()
}

/// Count suitably connected `n`-mosaics by filtering all `11^(n*n)` matrices.
pub fn brute_force_count(n: usize) -> u64 {
    let cells = n * n;
    let total = 11u64.pow(cells as u32);
    let mut tiles = vec![0u8; cells];
    let mut count = 0;
    for mut code in 0..total {
        for t in tiles.iter_mut() {
            *t = (code % 11) as u8;
            code /= 11;
        }
        count += u64::from(suitably_connected(n, &tiles));
    }
    count
}

/// Count suitably connected `n`-mosaics by trying every tile in each cell and
/// pruning on the top and left neighbours and the border.
pub fn backtracking_count(n: usize) -> u64 {
    fn fits(n: usize, tiles: &[u8], cell: usize, t: u8) -> bool {
        let (r, c) = (cell / n, cell % n);
        let top_ok = if r == 0 { !connects(t, 0) } else { connects(t, 0) == connects(tiles[cell - n], 2) };
        let left_ok = if c == 0 { !connects(t, 3) } else { connects(t, 3) == connects(tiles[cell - 1], 1) };
        let bottom_ok = r + 1 < n || !connects(t, 2);
        let right_ok = c + 1 < n || !connects(t, 1);
        top_ok && left_ok && bottom_ok && right_ok
    }
    fn go(n: usize, tiles: &mut Vec<u8>) -> u64 {
        let cell = tiles.len();
        if cell == n * n {
            return 1;
        }
        let mut total = 0;
        for t in 0..11u8 {
            if fits(n, tiles, cell, t) {
                tiles.push(t);
                total += go(n, tiles);
                tiles.pop();
            }
        }
        total
    }
    go(n, &mut Vec::with_capacity(n * n))
}

pub fn raw(m: &Mosaic) -> Vec<u8> {
    m.tiles().iter().map(|t| t.value()).collect()
}

pub fn poly(p: &LaurentPoly) -> Poly {
    p.terms().collect()
}

/// Seeded random suitably connected mosaics with `1..=max_crossings` crossings,
/// mixing knots and links across sizes 3 to 6.
pub fn corpus(size: usize, max_crossings: usize) -> Vec<Mosaic> {
    let mut out = Vec::with_capacity(size);
    let mut seed = 0u64;
    while out.len() < size {
        let n = 3 + (seed % 4) as usize;
        let m = random_mosaic(&GenerationSpec::new(n).seed(seed)).expect("unconstrained generation");
        seed += 1;
        let c = m.number_of_crossings();
        if (1..=max_crossings).contains(&c) {
            out.push(m);
        }
    }
    out
}
