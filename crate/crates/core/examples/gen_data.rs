//! Regenerates the bundled group data under `data/`.
//!
//! * `transitive.grp`: the transitive groups of degree at most 7, up to
//!   conjugacy in the symmetric group, found by brute force over pairs
//!   (class representative, element) of `S_n`.
//! * `f11sq_sl2_5.grp`: the affine group `F_11^2 : SL(2,5)` on 121 points.
//!
//! Run with `cargo run --release --example gen_data -- <data dir>`.

use std::collections::{BTreeMap, HashSet};
use std::fs;
use std::path::PathBuf;

use blockgalois::constructions::symmetric;
use blockgalois::group::{conjugacy_classes, write_group_file};
use blockgalois::{Perm, PermGroup};

fn is_transitive(g: &PermGroup) -> bool {
    let n = g.degree();
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut stack = vec![0u32];
    while let Some(x) = stack.pop() {
        for s in g.generators() {
            let y = s.image(x);
            if !seen[y as usize] {
                seen[y as usize] = true;
                stack.push(y);
            }
        }
    }
    seen.iter().all(|&b| b)
}

fn cycle_type_histogram(g: &PermGroup) -> BTreeMap<Vec<usize>, usize> {
    let mut hist = BTreeMap::new();
    g.for_each_element(|x| {
        let mut t: Vec<usize> = x.cycles().iter().map(|c| c.len()).collect();
        t.sort_unstable();
        *hist.entry(t).or_insert(0) += 1;
    });
    hist
}

fn element_set(g: &PermGroup) -> Vec<Vec<u32>> {
    let mut v: Vec<Vec<u32>> = g
        .elements()
        .unwrap()
        .iter()
        .map(|x| x.images().to_vec())
        .collect();
    v.sort();
    v
}

struct Found {
    group: PermGroup,
    histogram: BTreeMap<Vec<usize>, usize>,
}

fn conjugate_in(g: &PermGroup, h: &PermGroup, sn: &[Perm]) -> bool {
    sn.iter().any(|s| {
        g.generators()
            .iter()
            .all(|x| h.contains(&x.conjugate_by(s)))
    })
}

fn transitive_groups(n: usize) -> Vec<PermGroup> {
    if n == 1 {
        return vec![PermGroup::trivial(1)];
    }
    let sym = symmetric(n).unwrap();
    let sn = sym.elements().unwrap();
    let reps = conjugacy_classes(&sym).unwrap().representatives;
    let mut exact: HashSet<Vec<Vec<u32>>> = HashSet::new();
    let mut found: Vec<Found> = Vec::new();
    let full = sym.order_u64().unwrap();
    for a in &reps {
        for b in &sn {
            let g = PermGroup::from_generators(n, &[a.clone(), b.clone()]).unwrap();
            if !is_transitive(&g) {
                continue;
            }
            let order = g.order_u64().unwrap();
            if (order == full || order * 2 == full)
                && found.iter().any(|f| f.group.order_u64() == Some(order))
            {
                continue;
            }
            if !exact.insert(element_set(&g)) {
                continue;
            }
            let histogram = cycle_type_histogram(&g);
            let known = found.iter().any(|f| {
                f.group.order_u64() == Some(order)
                    && f.histogram == histogram
                    && conjugate_in(&g, &f.group, &sn)
            });
            if known {
                continue;
            }
            let g = if PermGroup::from_generators(n, std::slice::from_ref(a))
                .unwrap()
                .order_u64()
                == Some(order)
            {
                PermGroup::from_generators(n, std::slice::from_ref(a)).unwrap()
            } else {
                g
            };
            found.push(Found {
                group: g,
                histogram,
            });
        }
    }
    found.sort_by(|x, y| {
        x.group
            .order_u64()
            .cmp(&y.group.order_u64())
            .then_with(|| x.histogram.cmp(&y.histogram))
    });
    found.into_iter().map(|f| f.group).collect()
}

type Mat = [[u64; 2]; 2];

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let mut c = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = (a[i][0] * b[0][j] + a[i][1] * b[1][j]) % 11;
        }
    }
    c
}

fn mat_order(a: &Mat) -> usize {
    let id = [[1, 0], [0, 1]];
    let mut x = *a;
    let mut k = 1;
    while x != id {
        x = mat_mul(&x, a);
        k += 1;
    }
    k
}

fn closure_size(gens: &[Mat]) -> usize {
    let mut seen: HashSet<Mat> = HashSet::new();
    let id = [[1, 0], [0, 1]];
    seen.insert(id);
    let mut stack = vec![id];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = mat_mul(&x, g);
            if seen.insert(y) {
                stack.push(y);
            }
        }
    }
    seen.len()
}

fn navarro_group() -> PermGroup {
    let mut sl2: Vec<Mat> = Vec::new();
    for a in 0..11 {
        for b in 0..11 {
            for c in 0..11 {
                for d in 0..11 {
                    if (a * d + 121 - b * c % 11) % 11 == 1 {
                        sl2.push([[a, b], [c, d]]);
                    }
                }
            }
        }
    }
    let (x, y) = sl2
        .iter()
        .filter(|m| mat_order(m) == 4)
        .flat_map(|x| {
            sl2.iter()
                .filter(|m| mat_order(m) == 3)
                .map(move |y| (x, y))
        })
        .find(|(x, y)| mat_order(&mat_mul(x, y)) == 5 && closure_size(&[**x, **y]) == 120)
        .expect("SL(2,5) embeds in SL(2,11)");
    // point (u, v) has index u + 11 v
    let linear = |m: &Mat| {
        let images = (0..121u64)
            .map(|i| {
                let (u, v) = (i % 11, i / 11);
                let (u2, v2) = (
                    (m[0][0] * u + m[0][1] * v) % 11,
                    (m[1][0] * u + m[1][1] * v) % 11,
                );
                (u2 + 11 * v2) as u32
            })
            .collect();
        Perm::new(images).unwrap()
    };
    let translation = Perm::new(
        (0..121u32)
            .map(|i| (i / 11) * 11 + (i % 11 + 1) % 11)
            .collect(),
    )
    .unwrap();
    PermGroup::from_generators(121, &[translation, linear(x), linear(y)]).unwrap()
}

fn main() {
    let dir = PathBuf::from(
        std::env::args()
            .nth(1)
            .unwrap_or_else(|| "crates/core/data".into()),
    );
    fs::create_dir_all(&dir).unwrap();

    let mut text =
        String::from("# Transitive permutation groups of degree <= 7, up to conjugacy.\n");
    text.push_str("# Indexed within each degree by (order, cycle-type distribution).\n\n");
    let mut counts = Vec::new();
    for n in 1..=7 {
        let groups = transitive_groups(n);
        counts.push(groups.len());
        for (k, g) in groups.iter().enumerate() {
            let label = format!("T{n}.{} order {}", k + 1, g.order_u64().unwrap());
            text.push_str(&write_group_file(g, Some(&label)));
            text.push('\n');
        }
    }
    assert_eq!(
        counts,
        vec![1, 1, 2, 5, 5, 16, 7],
        "transitive group counts"
    );
    fs::write(dir.join("transitive.grp"), text).unwrap();

    let h = navarro_group();
    assert_eq!(h.order_u64(), Some(14520));
    fs::write(
        dir.join("f11sq_sl2_5.grp"),
        write_group_file(
            &h,
            Some("F_11^2 : SL(2,5) on the 121 vectors of F_11^2, point u + 11 v"),
        ),
    )
    .unwrap();
    println!("transitive counts {counts:?}; affine group order 14520");
}
