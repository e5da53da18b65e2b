//! Macro library: classical constructions expressed as sequences of primitive
//! board instructions.
//!
//! Each macro plans its moves analytically (ordinary floating point is enough
//! for planning) but realizes every geometric object through legal primitive
//! instructions on the [`Board`], so the recorded trace stands on its own: the
//! verifier re-checks it without knowing anything about the macros.
//!
//! The entry point is [`Toolkit`], which owns the board and the deterministic
//! source of "arbitrary" choices.

mod bisector;
mod choice;
mod circles;
mod extend;
mod far;
mod grid;
mod near;
mod perpendicular;
mod translate;

pub use choice::ChoiceSource;
pub use circles::{
    antipodal_on_circle, circle_circle_intersect, circle_line_intersect, rotate90_on_circle,
    CircleSpec,
};
pub use extend::{extend_line, LineHandle};
pub use bisector::perpendicular_bisector;
pub use far::{are_parallel, line_through, parallel_through, perpendicular_through};
pub use grid::{coordinate_grid, GridHandle};
pub use near::parallel_and_perpendicular_near;
pub use perpendicular::perpendicular_at;
pub use translate::translate_segment;

use crate::board::{Board, BoardError};
use crate::config::Config;
use crate::numerics::predicates::NumCtx;
use crate::numerics::{NumError, Point2};
use crate::trace::PointId;

/// Failure while executing a macro.
#[derive(Debug, thiserror::Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Board(#[from] BoardError),
    #[error("degenerate segment: the two points coincide")]
    DegenerateSegment,
    #[error("degenerate configuration: {0}")]
    DegenerateConfiguration(String),
    #[error("trial sequence exhausted: {0}")]
    TrialExhaustion(String),
    #[error("no intersection: {0}")]
    NoIntersection(String),
    #[error("coincident circles have no finite intersection set")]
    CoincidentCircles,
}

impl From<NumError> for ConstructionError {
    fn from(e: NumError) -> Self {
        ConstructionError::Board(BoardError::Num(e))
    }
}

/// The board together with the deterministic choice source used to resolve
/// every "arbitrary" decision the postulates allow.
#[derive(Debug)]
pub struct Toolkit {
    pub board: Board,
    pub choice: ChoiceSource,
}

impl Toolkit {
    pub fn new(config: Config) -> Self {
        let choice = ChoiceSource::new(&config);
        Toolkit { board: Board::new(config), choice }
    }

    pub fn ctx(&self) -> &NumCtx {
        self.board.ctx()
    }

    pub fn pt(&self, id: PointId) -> &Point2 {
        self.board.point(id)
    }

    /// Planning coordinates of a point (f64; never used for results).
    pub(crate) fn ptf(&self, id: PointId) -> (f64, f64) {
        self.board.point(id).to_f64()
    }
}
