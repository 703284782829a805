use super::{verify_drawing, PointSet, StraightLineDrawing};
use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::plane_graph::{induced_subgraph, triangulate, PlaneGraph};

/// Canonical ordering `v_1, ..., v_n` of a maximal plane graph: `(v_1, v_2)` is the
/// outer dart, `v_n` the third outer vertex, and each earlier `v_k` is the smallest
/// chord-free vertex on the outer cycle of what remains.
pub fn canonical_order(t: &PlaneGraph) -> Result<Vec<usize>> {
    let n = t.vertex_count();
    if !t.is_maximal() {
        return Err(Error::NotMaximal);
    }
    let (v1, v2) = t.outer_dart().ok_or(Error::NotMaximal)?;
    let rot2 = t.rotation(v2);
    let i = rot2.iter().position(|&w| w == v1).expect("outer dart is an edge");
    let vn = rot2[(i + rot2.len() - 1) % rot2.len()];
    if n == 3 {
        return Ok(vec![v1, v2, vn]);
    }

    let mut alive = vec![true; n];
    alive[vn] = false;
    let mut tail = vec![vn];
    for _ in 4..n {
        let keep: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
        let h = induced_subgraph(t, &keep)?;
        let on_cycle: Vec<bool> = {
            let mut c = vec![false; n];
            for v in h.outer_vertices_in_host()? {
                c[v] = true;
            }
            c
        };
        let pick = (0..n)
            .filter(|&x| on_cycle[x] && x != v1 && x != v2)
            .find(|&x| t.rotation(x).iter().filter(|&&y| alive[y] && on_cycle[y]).count() == 2)
            .ok_or_else(|| Error::Invariant("no removable outer vertex".into()))?;
        alive[pick] = false;
        tail.push(pick);
    }
    let v3 = (0..n)
        .find(|&v| alive[v] && v != v1 && v != v2)
        .ok_or_else(|| Error::Invariant("fewer than three vertices left".into()))?;
    let mut order = vec![v1, v2, v3];
    order.extend(tail.into_iter().rev());
    Ok(order)
}

/// Shift-method grid drawing of a maximal plane graph along a canonical ordering.
fn shift_layout(t: &PlaneGraph, order: &[usize]) -> Result<Vec<(i64, i64)>> {
    let n = t.vertex_count();
    let mut x = vec![0i64; n];
    let mut y = vec![0i64; n];
    let mut under: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    let (v1, v2, v3) = (order[0], order[1], order[2]);
    x[v2] = 2;
    x[v3] = 1;
    y[v3] = 1;
    let mut contour = vec![v1, v3, v2];
    for &vk in &order[3..] {
        let idx: Vec<usize> =
            (0..contour.len()).filter(|&i| t.has_edge(vk, contour[i])).collect();
        let (p, q) = match (idx.first(), idx.last()) {
            (Some(&p), Some(&q)) if q > p && idx.len() == q - p + 1 => (p, q),
            _ => return Err(Error::Invariant(format!("neighbors of {vk} are not contiguous"))),
        };
        for &w in &contour[p + 1..q] {
            for &u in &under[w] {
                x[u] += 1;
            }
        }
        for &w in &contour[q..] {
            for &u in &under[w] {
                x[u] += 2;
            }
        }
        let (wp, wq) = (contour[p], contour[q]);
        x[vk] = (x[wp] + x[wq] + y[wq] - y[wp]) / 2;
        y[vk] = (x[wq] - x[wp] + y[wp] + y[wq]) / 2;
        let mut covered: Vec<usize> = vec![vk];
        for &w in &contour[p + 1..q] {
            covered.extend(under[w].iter().copied());
        }
        under[vk] = covered;
        let mut next = contour[..=p].to_vec();
        next.push(vk);
        next.extend_from_slice(&contour[q..]);
        contour = next;
    }
    Ok((0..n).map(|v| (x[v], y[v])).collect())
}

/// Planar straight-line drawing of `g` realizing its embedding, with integer
/// coordinates and no three vertices collinear.
///
/// The graph is triangulated, drawn on a grid with the shift method, scaled, and
/// vertex `i` is nudged by `(i, i^2)`; the scale doubles until the exact checks pass.
pub fn draw_general_position(g: &PlaneGraph) -> Result<StraightLineDrawing> {
    g.check()?;
    let n = g.vertex_count();
    if n <= 2 {
        let placement = [Point::new(0, 0), Point::new(1, 0)][..n].to_vec();
        return Ok(StraightLineDrawing { graph: g.clone(), placement });
    }
    let (t, _) = triangulate(g)?;
    let order = canonical_order(&t)?;
    let base = shift_layout(&t, &order)?;
    let mut scale = 8 * (n as i64).pow(3);
    for _ in 0..32 {
        let placement: Vec<Point> = base
            .iter()
            .enumerate()
            .map(|(i, &(bx, by))| Point::new(bx * scale + i as i64, by * scale + (i * i) as i64))
            .collect();
        let d = StraightLineDrawing { graph: g.clone(), placement };
        if PointSet::new(d.placement.clone()).general_position() && verify_drawing(&d)?.is_clean() {
            return Ok(d);
        }
        scale = scale
            .checked_mul(2)
            .ok_or_else(|| Error::DrawingFailed("coordinates overflow".into()))?;
    }
    Err(Error::DrawingFailed("no scale produced a clean drawing".into()))
}
