//! Spiral coordinate grid (plane covering by unit squares).
//!
//! Starting from two perpendicular axes through `A`, the spiral erects each
//! line `lᵢ` perpendicular to `lᵢ₋₁` at the current end point `Aᵢ₋₁`, then
//! walks `⌈i/2⌉` units along it, so that consecutive segments wind outward
//! and the grid gains one new integer-offset line per step. The spiral stops
//! as soon as the four lines bounding the unit cell of the target point
//! exist.

use std::collections::BTreeMap;

use crate::numerics::{Point2, Scalar};
use crate::trace::PointId;

use super::perpendicular::perpendicular_at;
use super::{ConstructionError, LineHandle, Toolkit};

/// A family of unit-spaced grid lines aligned with two axes through `origin`.
///
/// `horizontals[k]` is parallel to the first axis at signed offset `k` along
/// the second; `verticals[k]` the other way round.
#[derive(Debug)]
pub struct GridHandle {
    pub origin: PointId,
    /// Frame directions (the axis carriers' unit directions).
    pub u: Point2,
    pub v: Point2,
    pub horizontals: BTreeMap<i64, LineHandle>,
    pub verticals: BTreeMap<i64, LineHandle>,
}

impl GridHandle {
    /// Planning frame coordinates of a plane point.
    pub fn frame_of(&self, tk: &Toolkit, p: &Point2) -> (f64, f64) {
        let rel = p.sub(tk.pt(self.origin));
        (rel.dot(&self.u).to_f64(), rel.dot(&self.v).to_f64())
    }

    /// Plane location of planning frame coordinates.
    fn plane_of(&self, tk: &Toolkit, x: f64, y: f64) -> Point2 {
        let bits = 64;
        tk.pt(self.origin)
            .add(&self.u.scale(&Scalar::from_f64(x, bits)))
            .add(&self.v.scale(&Scalar::from_f64(y, bits)))
    }
}

/// Planned frame coordinates of the spiral's corner `Aᵢ`.
fn spiral_corner(i: u32) -> (i64, i64) {
    if i == 0 {
        return (0, 0);
    }
    let k = ((i - 1) / 4) as i64;
    match (i - 1) % 4 {
        0 => (k + 1, -k),
        1 => (k + 1, k + 1),
        2 => (-(k + 1), k + 1),
        _ => (-(k + 1), -(k + 1)),
    }
}

/// Grid line added by spiral step `i ≥ 2`: (vertical?, offset).
fn spiral_line(i: u32) -> (bool, i64) {
    let j = i - 2;
    let k = (j / 4) as i64;
    match j % 4 {
        0 => (true, k + 1),
        1 => (false, k + 1),
        2 => (true, -(k + 1)),
        _ => (false, -(k + 1)),
    }
}

/// Build the spiral grid about `a` until the unit cell of `b` is bounded on
/// all four sides. `axis_l` and `axis_p` must be perpendicular lines through
/// `a`; they become the grid's offset-0 families.
pub fn coordinate_grid(
    tk: &mut Toolkit,
    a: PointId,
    axis_l: LineHandle,
    axis_p: LineHandle,
    b: PointId,
) -> Result<GridHandle, ConstructionError> {
    let eps = Scalar::pow2(-(tk.board.config().precision_bits as i32) / 2, 64);
    let dot = axis_l.carrier.dir.dot(&axis_p.carrier.dir).abs();
    if dot > eps || !tk.ctx().scalar_equal(&axis_l.carrier.signed_dist(tk.pt(a)), &Scalar::zero(64))
        || !tk.ctx().scalar_equal(&axis_p.carrier.signed_dist(tk.pt(a)), &Scalar::zero(64))
    {
        return Err(ConstructionError::DegenerateConfiguration(
            "coordinate_grid: axes must be perpendicular lines through the origin point".into(),
        ));
    }
    let mut grid = GridHandle {
        origin: a,
        u: axis_l.carrier.dir.clone(),
        v: axis_p.carrier.dir.clone(),
        horizontals: BTreeMap::new(),
        verticals: BTreeMap::new(),
    };
    grid.horizontals.insert(0, axis_l);
    grid.verticals.insert(0, axis_p);

    let (bx, by) = grid.frame_of(tk, &tk.pt(b).clone());
    let (cx, cy) = (bx.floor() as i64, by.floor() as i64);
    let covered = |g: &GridHandle| {
        g.verticals.contains_key(&cx)
            && g.verticals.contains_key(&(cx + 1))
            && g.horizontals.contains_key(&cy)
            && g.horizontals.contains_key(&(cy + 1))
    };

    // Walk the spiral: l₁ is the first axis; A₁ its unit mark.
    let mut prev_line = grid.horizontals.get(&0).unwrap().clone();
    let mut prev_corner = {
        let one = Scalar::one(256);
        prev_line.point_at_param(tk, &one)?
    };
    // The clone shares the axis's board objects; keep the extended cover.
    grid.horizontals.insert(0, prev_line.clone());

    let mut i: u32 = 2;
    while !covered(&grid) {
        assert!(i < 500, "spiral failed to reach the target cell");
        let mut line = perpendicular_at(tk, &mut prev_line, prev_corner)?;
        let (px, py) = spiral_corner(i);
        let plan = grid.plane_of(tk, px as f64, py as f64);
        let t = line.param_f(&plan).round() as i64;
        debug_assert_eq!(t.unsigned_abs() as u32, i.div_ceil(2));
        let corner = line.point_at_param(tk, &Scalar::from_i64(t, 256))?;
        let (vertical, offset) = spiral_line(i);
        let family = if vertical { &mut grid.verticals } else { &mut grid.horizontals };
        family.insert(offset, line.clone());
        prev_line = line;
        prev_corner = corner;
        i += 1;
    }
    Ok(grid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Config;
    use crate::numerics::Scalar;

    fn sc(text: &str) -> Scalar {
        Scalar::from_decimal(text, 256).unwrap()
    }

    fn axes(tk: &mut Toolkit) -> (PointId, LineHandle, LineHandle) {
        let a = tk.board.given_point(&sc("0"), &sc("0"));
        let e = tk.board.given_point(&sc("1"), &sc("0"));
        let mut l = LineHandle::from_unit_points(tk, a, e).unwrap();
        let p = perpendicular_at(tk, &mut l, a).unwrap();
        (a, l, p)
    }

    #[test]
    fn corner_and_line_tables_follow_the_paper_pattern() {
        let expect = [
            (1, (1, 0)),
            (2, (1, 1)),
            (3, (-1, 1)),
            (4, (-1, -1)),
            (5, (2, -1)),
            (6, (2, 2)),
            (7, (-2, 2)),
            (8, (-2, -2)),
            (9, (3, -2)),
        ];
        for (i, c) in expect {
            assert_eq!(spiral_corner(i), c, "corner {i}");
        }
        assert_eq!(spiral_line(2), (true, 1));
        assert_eq!(spiral_line(3), (false, 1));
        assert_eq!(spiral_line(4), (true, -1));
        assert_eq!(spiral_line(5), (false, -1));
        assert_eq!(spiral_line(6), (true, 2));
        assert_eq!(spiral_line(10), (true, 3));
    }

    #[test]
    fn first_cell_needs_only_the_inner_spiral() {
        let mut tk = Toolkit::new(Config::default());
        let (a, l, p) = axes(&mut tk);
        let b = tk.board.given_point(&sc("0.5"), &sc("0.5"));
        let grid = coordinate_grid(&mut tk, a, l, p, b).unwrap();
        assert!(grid.verticals.contains_key(&0) && grid.verticals.contains_key(&1));
        assert!(grid.horizontals.contains_key(&0) && grid.horizontals.contains_key(&1));
        // Line offsets are exact: vertical k at distance k from the origin.
        for (&k, line) in &grid.verticals {
            let d = line.carrier.signed_dist(tk.pt(a)).abs().to_f64();
            assert!((d - k.abs() as f64).abs() < 1e-30, "vertical {k} at {d}");
        }
    }

    #[test]
    fn origin_target_is_covered_immediately() {
        let mut tk = Toolkit::new(Config::default());
        let (a, l, p) = axes(&mut tk);
        let grid = coordinate_grid(&mut tk, a, l, p, a).unwrap();
        assert!(grid.verticals.contains_key(&1));
        assert!(grid.horizontals.contains_key(&1));
    }

    #[test]
    fn distant_cell_is_reached_with_pinned_cost() {
        let mut tk = Toolkit::new(Config::default());
        let (a, l, p) = axes(&mut tk);
        let b = tk.board.given_point(&sc("10.3"), &sc("-7.2"));
        let grid = coordinate_grid(&mut tk, a, l, p, b).unwrap();
        for key in [10i64, 11] {
            assert!(grid.verticals.contains_key(&key));
        }
        for key in [-8i64, -7] {
            assert!(grid.horizontals.contains_key(&key));
        }
        // Grid-family geometry: all verticals mutually parallel, unit spacing.
        let v10 = &grid.verticals[&10];
        let v11 = &grid.verticals[&11];
        let eps = Scalar::pow2(-120, 256);
        assert!(v10.carrier.dir.cross(&v11.carrier.dir).abs() < eps);
        // Regression pin: the spiral cost is deterministic under the default
        // configuration.
        let count = tk.board.instruction_count();
        assert!(count < 6000, "instruction count {count}");
    }
}
