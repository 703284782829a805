//! Exact integer geometry. Coordinates are `i64`, every predicate evaluates in `i128`.
//!
//! The y axis points up, so a positive orientation is a counterclockwise turn.

use std::cmp::Ordering;
use std::collections::HashMap;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }
}

impl From<[i64; 2]> for Point {
    fn from([x, y]: [i64; 2]) -> Self {
        Self { x, y }
    }
}

impl From<Point> for [i64; 2] {
    fn from(p: Point) -> Self {
        [p.x, p.y]
    }
}

pub fn cross(o: Point, a: Point, b: Point) -> i128 {
    let (ax, ay) = (a.x as i128 - o.x as i128, a.y as i128 - o.y as i128);
    let (bx, by) = (b.x as i128 - o.x as i128, b.y as i128 - o.y as i128);
    ax * by - ay * bx
}

/// `Greater` when `a, b, c` turn counterclockwise.
pub fn orient(a: Point, b: Point, c: Point) -> Ordering {
    cross(a, b, c).cmp(&0)
}

fn dot(o: Point, a: Point, b: Point) -> i128 {
    let (ax, ay) = (a.x as i128 - o.x as i128, a.y as i128 - o.y as i128);
    let (bx, by) = (b.x as i128 - o.x as i128, b.y as i128 - o.y as i128);
    ax * bx + ay * by
}

/// `p` lies on the closed segment `ab`.
pub fn on_segment(p: Point, a: Point, b: Point) -> bool {
    orient(a, b, p) == Ordering::Equal
        && p.x >= a.x.min(b.x)
        && p.x <= a.x.max(b.x)
        && p.y >= a.y.min(b.y)
        && p.y <= a.y.max(b.y)
}

/// Closed segments `ab` and `cd` share at least one point.
pub fn segments_intersect(a: Point, b: Point, c: Point, d: Point) -> bool {
    let (o1, o2) = (orient(a, b, c), orient(a, b, d));
    let (o3, o4) = (orient(c, d, a), orient(c, d, b));
    if o1 != o2 && o3 != o4 && o1 != Ordering::Equal && o2 != Ordering::Equal
        && o3 != Ordering::Equal && o4 != Ordering::Equal
    {
        return true;
    }
    on_segment(c, a, b) || on_segment(d, a, b) || on_segment(a, c, d) || on_segment(b, c, d)
}

/// Two segments from a common endpoint `p` overlap beyond `p`.
pub fn overlap_at_shared_endpoint(p: Point, a: Point, b: Point) -> bool {
    orient(p, a, b) == Ordering::Equal && dot(p, a, b) > 0
}

/// Sorts target points around `center` counterclockwise starting from the positive x axis.
pub fn sort_ccw(center: Point, pts: &mut [(usize, Point)]) {
    let half = |p: Point| -> u8 {
        let (dx, dy) = (p.x - center.x, p.y - center.y);
        if dy > 0 || (dy == 0 && dx > 0) {
            0
        } else {
            1
        }
    };
    pts.sort_by(|&(_, a), &(_, b)| half(a).cmp(&half(b)).then_with(|| orient(center, b, a)));
}

/// Indices of `targets` in clockwise order around `center`, starting anywhere.
pub fn clockwise_order(center: Point, targets: &[(usize, Point)]) -> Vec<usize> {
    let mut v = targets.to_vec();
    sort_ccw(center, &mut v);
    v.iter().rev().map(|&(i, _)| i).collect()
}

/// Twice the signed area; positive for counterclockwise polygons.
pub fn signed_area2(poly: &[Point]) -> i128 {
    let k = poly.len();
    (0..k)
        .map(|i| {
            let (a, b) = (poly[i], poly[(i + 1) % k]);
            a.x as i128 * b.y as i128 - b.x as i128 * a.y as i128
        })
        .sum()
}

/// Winding number of `p` with respect to a closed polygon not passing through `p`.
pub fn winding_number(p: Point, poly: &[Point]) -> i64 {
    let k = poly.len();
    let mut w = 0;
    for i in 0..k {
        let (a, b) = (poly[i], poly[(i + 1) % k]);
        if a.y <= p.y {
            if b.y > p.y && orient(a, b, p) == Ordering::Greater {
                w += 1;
            }
        } else if b.y <= p.y && orient(a, b, p) == Ordering::Less {
            w -= 1;
        }
    }
    w
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Some collinear triple `(i, j, k)` with `i < j < k`, or `None`.
///
/// For each point the directions to later points are reduced to primitive vectors
/// with a fixed sign, so two equal keys mean a shared line.
pub fn find_collinear_triple(points: &[Point]) -> Option<(usize, usize, usize)> {
    for i in 0..points.len() {
        let mut seen: HashMap<(i128, i128), usize> = HashMap::new();
        for j in i + 1..points.len() {
            let dx = points[j].x as i128 - points[i].x as i128;
            let dy = points[j].y as i128 - points[i].y as i128;
            let g = gcd(dx, dy).max(1);
            let (mut dx, mut dy) = (dx / g, dy / g);
            if dx < 0 || (dx == 0 && dy < 0) {
                dx = -dx;
                dy = -dy;
            }
            if let Some(&first) = seen.get(&(dx, dy)) {
                return Some((i, first, j));
            }
            seen.insert((dx, dy), j);
        }
    }
    None
}

/// Convex hull vertices in clockwise order, starting from the lowest-index hull point.
/// Assumes no three points are collinear.
pub fn convex_hull_clockwise(points: &[Point]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..points.len()).collect();
    idx.sort_by_key(|&i| (points[i].x, points[i].y));
    if idx.len() < 3 {
        return idx;
    }
    let mut lower: Vec<usize> = Vec::new();
    for &i in &idx {
        while lower.len() >= 2
            && orient(points[lower[lower.len() - 2]], points[lower[lower.len() - 1]], points[i])
                != Ordering::Greater
        {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in idx.iter().rev() {
        while upper.len() >= 2
            && orient(points[upper[upper.len() - 2]], points[upper[upper.len() - 1]], points[i])
                != Ordering::Greater
        {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    let mut ccw = lower;
    ccw.extend(upper);
    ccw.reverse();
    let start = ccw.iter().enumerate().min_by_key(|&(_, &i)| i).map(|(k, _)| k).unwrap_or(0);
    ccw.rotate_left(start);
    ccw
}
