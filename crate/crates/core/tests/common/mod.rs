//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use nalgebra::{Complex, DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use blockgalois::chartab::CharacterTable;
use blockgalois::{ConjClassData, Perm, PermGroup};

pub type C64 = Complex<f64>;

/// All elements by breadth-first closure under the generators.
pub fn closure(degree: usize, gens: &[Perm]) -> Vec<Perm> {
    let id = Perm::identity(degree);
    let mut seen: HashSet<Vec<u32>> = HashSet::from([id.images().to_vec()]);
    let mut out = vec![id];
    let mut i = 0;
    while i < out.len() {
        for s in gens {
            let y = out[i].compose(s);
            if seen.insert(y.images().to_vec()) {
                out.push(y);
            }
        }
        i += 1;
    }
    out
}

/// Conjugacy classes as index sets into `elements`, by orbit closure under
/// conjugation by the generators.
pub fn brute_classes(elements: &[Perm], gens: &[Perm]) -> Vec<Vec<usize>> {
    let index: HashMap<Vec<u32>, usize> = elements
        .iter()
        .enumerate()
        .map(|(i, g)| (g.images().to_vec(), i))
        .collect();
    let mut class_of = vec![usize::MAX; elements.len()];
    let mut classes = Vec::new();
    for start in 0..elements.len() {
        if class_of[start] != usize::MAX {
            continue;
        }
        let c = classes.len();
        class_of[start] = c;
        let mut members = vec![start];
        let mut i = 0;
        while i < members.len() {
            for s in gens {
                let y = index[elements[members[i]].conjugate_by(s).images()];
                if class_of[y] == usize::MAX {
                    class_of[y] = c;
                    members.push(y);
                }
            }
            i += 1;
        }
        classes.push(members);
    }
    classes
}

/// The character table computed numerically from class structure constants:
/// common right eigenvectors of the class multiplication matrices, found as
/// eigenvectors of a random combination. Rows are in arbitrary order;
/// columns follow `classes`.
pub fn numeric_table(group: &PermGroup, classes: &ConjClassData, seed: u64) -> Vec<Vec<C64>> {
    let elements = closure(group.degree(), group.generators());
    let order = elements.len();
    let r = classes.len();
    let col: Vec<usize> = elements
        .iter()
        .map(|g| classes.class_of(g).expect("element has a class"))
        .collect();
    let index: HashMap<Vec<u32>, usize> = elements
        .iter()
        .enumerate()
        .map(|(i, g)| (g.images().to_vec(), i))
        .collect();
    let reps: Vec<usize> = classes
        .representatives
        .iter()
        .map(|g| index[g.images()])
        .collect();

    // a[i][j][k] = #{x in K_i : x^-1 g_k in K_j}
    let mut a = vec![vec![vec![0f64; r]; r]; r];
    for (xi, x) in elements.iter().enumerate() {
        let xinv = x.inverse();
        for (k, &gk) in reps.iter().enumerate() {
            let y = index[xinv.compose(&elements[gk]).images()];
            a[col[xi]][col[y]][k] += 1.0;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coeffs: Vec<f64> = (0..r).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let m = DMatrix::from_fn(r, r, |j, k| {
        (0..r).map(|i| coeffs[i] * a[i][j][k]).sum::<f64>()
    });
    let eigenvalues = m.clone().complex_eigenvalues();
    let mc: DMatrix<C64> = m.map(|x| Complex::new(x, 0.0));
    let sizes: Vec<f64> = classes.sizes.iter().map(|&s| s as f64).collect();

    let mut rows = Vec::with_capacity(r);
    for lambda in eigenvalues.iter() {
        let shift = lambda + Complex::new(1e-9, 1e-9);
        let b = &mc - DMatrix::<C64>::identity(r, r) * shift;
        let lu = b.lu();
        let mut v = DVector::from_element(r, Complex::new(1.0, 0.3));
        for _ in 0..4 {
            v = lu.solve(&v).expect("shifted matrix is invertible");
            let n = v.norm();
            v /= Complex::new(n, 0.0);
        }
        let w: Vec<C64> = (0..r).map(|k| v[k] / v[0]).collect();
        let norm: f64 = (0..r).map(|k| w[k].norm_sqr() / sizes[k]).sum();
        let deg = (order as f64 / norm).sqrt();
        rows.push((0..r).map(|k| w[k] * deg / sizes[k]).collect());
    }
    rows
}

/// Matches every numeric row with a distinct exact row within `tol`.
pub fn matches_up_to_row_permutation(
    table: &CharacterTable,
    numeric: &[Vec<C64>],
    tol: f64,
) -> bool {
    if numeric.len() != table.len() {
        return false;
    }
    let exact: Vec<Vec<C64>> = table
        .irreducibles()
        .iter()
        .map(|chi| {
            chi.values()
                .iter()
                .map(|v| {
                    let (re, im) = v.approx();
                    Complex::new(re, im)
                })
                .collect()
        })
        .collect();
    let mut used = vec![false; exact.len()];
    for row in numeric {
        let hit = (0..exact.len())
            .find(|&i| !used[i] && exact[i].iter().zip(row).all(|(x, y)| (x - y).norm() < tol));
        match hit {
            Some(i) => used[i] = true,
            None => return false,
        }
    }
    true
}
