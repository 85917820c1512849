//! Zero level sets of Re f and Im f by marching squares on the scan grid.

use num_complex::Complex64;
use std::collections::HashMap;

use super::grid::{Grid, SearchRect};
use crate::error::Result;
use crate::models::BranchCut;

pub type Polyline = Vec<Complex64>;

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ContourSet {
    pub re_zero: Vec<Polyline>,
    pub im_zero: Vec<Polyline>,
}

// Edge ids: (0, i, j) is the horizontal edge from node (i,j) to (i+1,j),
// (1, i, j) the vertical one from (i,j) to (i,j+1).
type EdgeId = (u8, usize, usize);

fn crossing(rect: &SearchRect, e: EdgeId, va: f64, vb: f64) -> Complex64 {
    let (_, i, j) = e;
    let a = rect.node(i, j);
    let b = if e.0 == 0 { rect.node(i + 1, j) } else { rect.node(i, j + 1) };
    let t = if va == vb { 0.5 } else { va / (va - vb) };
    a + (b - a) * t.clamp(0.0, 1.0)
}

fn level_set(grid: &Grid, part: fn(&Complex64) -> f64) -> Vec<Polyline> {
    let rect = &grid.rect;
    let mut points: HashMap<EdgeId, Complex64> = HashMap::new();
    let mut segments: Vec<(EdgeId, EdgeId)> = Vec::new();
    for j in 0..rect.ny {
        for i in 0..rect.nx {
            let Some(c) = grid.cell(i, j) else { continue };
            let v: Vec<f64> = c.iter().map(part).collect();
            // edges counter-clockwise: bottom, right, top, left
            let edges: [(EdgeId, usize, usize); 4] =
                [((0, i, j), 0, 1), ((1, i + 1, j), 1, 2), ((0, i, j + 1), 3, 2), ((1, i, j), 0, 3)];
            let mut hits: Vec<EdgeId> = Vec::with_capacity(4);
            for &(e, a, b) in &edges {
                if (v[a] >= 0.0) != (v[b] >= 0.0) {
                    points.entry(e).or_insert_with(|| crossing(rect, e, v[a], v[b]));
                    hits.push(e);
                }
            }
            match hits.len() {
                2 => segments.push((hits[0], hits[1])),
                4 => {
                    // saddle: pair the edges so the centre value's sign
                    // region stays connected
                    let centre = v.iter().sum::<f64>() / 4.0;
                    if (centre >= 0.0) == (v[0] >= 0.0) {
                        segments.push((hits[0], hits[1]));
                        segments.push((hits[2], hits[3]));
                    } else {
                        segments.push((hits[0], hits[3]));
                        segments.push((hits[1], hits[2]));
                    }
                }
                _ => {}
            }
        }
    }
    join(&segments, &points)
}

fn join(segments: &[(EdgeId, EdgeId)], points: &HashMap<EdgeId, Complex64>) -> Vec<Polyline> {
    let mut by_edge: HashMap<EdgeId, Vec<usize>> = HashMap::new();
    for (k, &(a, b)) in segments.iter().enumerate() {
        by_edge.entry(a).or_default().push(k);
        by_edge.entry(b).or_default().push(k);
    }
    let mut used = vec![false; segments.len()];
    let mut out = Vec::new();
    let next = |edge: EdgeId, used: &[bool]| -> Option<usize> {
        by_edge.get(&edge)?.iter().copied().find(|&k| !used[k])
    };
    for start in 0..segments.len() {
        if used[start] {
            continue;
        }
        used[start] = true;
        let (a, b) = segments[start];
        let mut chain: Vec<EdgeId> = vec![a, b];
        // grow forward from b, then backward from a
        for forward in [true, false] {
            loop {
                let end = if forward { *chain.last().unwrap() } else { chain[0] };
                let Some(k) = next(end, &used) else { break };
                used[k] = true;
                let (p, q) = segments[k];
                let other = if p == end { q } else { p };
                if forward {
                    chain.push(other);
                } else {
                    chain.insert(0, other);
                }
            }
        }
        out.push(chain.iter().map(|e| points[e]).collect());
    }
    out
}

/// Contours of Re f = 0 and Im f = 0 over `rect`, skipping cells with
/// failed evaluations or a branch cut through them.
pub fn contour_polylines_masked<F>(f: &F, rect: &SearchRect, cuts: &[BranchCut]) -> Result<ContourSet>
where
    F: Fn(Complex64) -> Result<Complex64> + Sync,
{
    rect.validate()?;
    let grid = Grid::evaluate(f, rect, cuts);
    Ok(contours_from_grid(&grid))
}

pub fn contours_from_grid(grid: &Grid) -> ContourSet {
    ContourSet { re_zero: level_set(grid, |v| v.re), im_zero: level_set(grid, |v| v.im) }
}

pub fn contour_polylines<F>(f: &F, rect: &SearchRect) -> Result<ContourSet>
where
    F: Fn(Complex64) -> Result<Complex64> + Sync,
{
    contour_polylines_masked(f, rect, &[])
}
