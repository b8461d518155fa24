//! Best half-space classifier over a fixed grid of directions.
//!
//! In 2D the normals are `(cos a, sin a)` for `a = pi * i / 720`,
//! `i = 0..720`. In 3D they are the spherical grid with 720 azimuths
//! `2 pi i / 720` and 360 polar angles `pi j / 360`. Both grids contain the
//! coordinate axes. For each normal the points are sorted by projection and
//! every threshold between distinct projections is tried with both class
//! orientations, so the search is exhaustive along each direction.

use std::f64::consts::PI;

use rayon::prelude::*;

use super::embed::Embedding;
use crate::{Error, Result};

const AZIMUTHS: usize = 720;
const POLAR_ANGLES: usize = 360;

/// Points with `normal . x > offset` are assigned `positive_class`.
#[derive(Debug, Clone, PartialEq)]
pub struct HalfspaceFit {
    pub error_rate: f64,
    pub misclassified: usize,
    pub normal: Vec<f64>,
    pub offset: f64,
    pub positive_class: usize,
}

fn binary_classes(labels: &[usize]) -> Result<[usize; 2]> {
    let mut classes: Vec<usize> = labels.to_vec();
    classes.sort_unstable();
    classes.dedup();
    match classes[..] {
        [a, b] => Ok([a, b]),
        _ => Err(Error::LabelClasses(classes.len())),
    }
}

fn directions(dims: usize) -> Vec<Vec<f64>> {
    match dims {
        2 => (0..AZIMUTHS)
            .map(|i| {
                let a = PI * i as f64 / AZIMUTHS as f64;
                vec![a.cos(), a.sin()]
            })
            .collect(),
        _ => (0..POLAR_ANGLES)
            .flat_map(|j| {
                let polar = PI * j as f64 / POLAR_ANGLES as f64;
                (0..AZIMUTHS).map(move |i| {
                    let az = 2.0 * PI * i as f64 / AZIMUTHS as f64;
                    vec![polar.sin() * az.cos(), polar.sin() * az.sin(), polar.cos()]
                })
            })
            .collect(),
    }
}

fn axes(dims: usize) -> Vec<Vec<f64>> {
    (0..dims)
        .map(|a| (0..dims).map(|k| if k == a { 1.0 } else { 0.0 }).collect())
        .collect()
}

/// Exhaustive threshold sweep along one normal.
fn sweep(embedding: &Embedding, is_second: &[bool], normal: &[f64], classes: [usize; 2]) -> HalfspaceFit {
    let n = is_second.len();
    let mut proj: Vec<(f64, usize)> = embedding
        .points()
        .enumerate()
        .map(|(i, p)| (p.iter().zip(normal).map(|(x, u)| x * u).sum(), i))
        .collect();
    proj.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));

    let seconds_total = is_second.iter().filter(|&&s| s).count();
    let firsts_total = n - seconds_total;
    // Orientation: left of the threshold is class 0, right is class 1.
    let mut best = (usize::MAX, 0usize, false);
    let mut seconds_left = 0;
    for s in 0..=n {
        if s > 0 {
            if is_second[proj[s - 1].1] {
                seconds_left += 1;
            }
            if s < n && proj[s - 1].0 == proj[s].0 {
                continue;
            }
        }
        let firsts_left = s - seconds_left;
        let errors = seconds_left + (firsts_total - firsts_left);
        let (count, flipped) = if n - errors < errors {
            (n - errors, true)
        } else {
            (errors, false)
        };
        if count < best.0 {
            best = (count, s, flipped);
        }
    }
    let (misclassified, s, flipped) = best;
    let offset = match s {
        0 => proj[0].0 - 1.0,
        s if s == n => proj[n - 1].0 + 1.0,
        s => 0.5 * (proj[s - 1].0 + proj[s].0),
    };
    HalfspaceFit {
        error_rate: misclassified as f64 / n as f64,
        misclassified,
        normal: normal.to_vec(),
        offset,
        positive_class: if flipped { classes[0] } else { classes[1] },
    }
}

fn search(embedding: &Embedding, labels: &[usize], normals: Vec<Vec<f64>>) -> Result<HalfspaceFit> {
    if labels.len() != embedding.n() {
        return Err(Error::DimensionMismatch {
            expected: embedding.n(),
            found: labels.len(),
        });
    }
    if embedding.dims() < 2 {
        return Err(Error::InvalidDims(embedding.dims()));
    }
    let classes = binary_classes(labels)?;
    let is_second: Vec<bool> = labels.iter().map(|&l| l == classes[1]).collect();
    let best = normals
        .par_iter()
        .enumerate()
        .map(|(k, u)| (k, sweep(embedding, &is_second, u, classes)))
        .reduce_with(|a, b| {
            if (b.1.misclassified, b.0) < (a.1.misclassified, a.0) {
                b
            } else {
                a
            }
        })
        .expect("direction grid is never empty");
    Ok(best.1)
}

/// Lowest half-space misclassification rate over the direction grid.
pub fn halfspace_error(embedding: &Embedding, labels: &[usize]) -> Result<HalfspaceFit> {
    let dims = embedding.dims();
    if !(2..=3).contains(&dims) {
        return Err(Error::InvalidDims(dims));
    }
    search(embedding, labels, directions(dims))
}

/// Best threshold along a single coordinate axis.
pub fn best_axis_threshold(embedding: &Embedding, labels: &[usize]) -> Result<HalfspaceFit> {
    search(embedding, labels, axes(embedding.dims()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn emb(points: &[[f64; 2]]) -> Embedding {
        Embedding::from_coords(points.iter().flatten().copied().collect(), 2)
    }

    #[test]
    fn separable_by_sign_of_x() {
        let e = emb(&[[-1.0, 0.3], [-2.0, -0.7], [-0.5, 2.0], [0.7, 1.0], [1.5, -3.0]]);
        let fit = halfspace_error(&e, &[0, 0, 0, 1, 1]).unwrap();
        assert_eq!(fit.misclassified, 0);
        assert_eq!(fit.error_rate, 0.0);
    }

    #[test]
    fn hyperplane_reproduces_the_error() {
        let e = emb(&[[0.0, 0.0], [1.0, 1.0], [0.2, 0.9], [0.8, 0.1], [0.5, 0.5], [0.9, 0.8]]);
        let labels = [0, 1, 0, 1, 0, 1];
        let fit = halfspace_error(&e, &labels).unwrap();
        let wrong = e
            .points()
            .zip(labels)
            .filter(|(p, l)| {
                let side = p[0] * fit.normal[0] + p[1] * fit.normal[1] > fit.offset;
                side != (*l == fit.positive_class)
            })
            .count();
        assert_eq!(wrong, fit.misclassified);
    }

    #[test]
    fn single_class_is_rejected() {
        let e = emb(&[[0.0, 0.0], [1.0, 1.0]]);
        assert!(matches!(halfspace_error(&e, &[3, 3]), Err(Error::LabelClasses(1))));
    }

    #[test]
    fn three_classes_are_rejected() {
        let e = emb(&[[0.0, 0.0], [1.0, 1.0], [2.0, 0.0]]);
        assert!(matches!(halfspace_error(&e, &[0, 1, 2]), Err(Error::LabelClasses(3))));
    }

    #[test]
    fn two_points_one_per_class() {
        let e = emb(&[[0.3, -0.3], [-0.3, 0.3]]);
        assert_eq!(halfspace_error(&e, &[1, 0]).unwrap().misclassified, 0);
    }

    #[test]
    fn coincident_points_cannot_be_split() {
        let e = emb(&[[1.0, 1.0], [1.0, 1.0], [0.0, 0.0]]);
        assert_eq!(halfspace_error(&e, &[0, 1, 1]).unwrap().misclassified, 1);
    }

    #[test]
    fn three_dimensional_grid() {
        let coords = vec![0.0, 0.0, -1.0, 0.1, 0.2, -2.0, 0.0, 0.1, 1.0, -0.2, 0.0, 3.0];
        let e = Embedding::from_coords(coords, 3);
        assert_eq!(halfspace_error(&e, &[0, 0, 1, 1]).unwrap().misclassified, 0);
    }
}
