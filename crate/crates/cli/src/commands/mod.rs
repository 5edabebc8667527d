pub mod matrices;
pub mod scan;
pub mod table;
pub mod verify;

use hypercx_core::{AlgebraLevel, StructureConstants};

use crate::args::Common;
use crate::error::CliResult;

/// Validates the level against the cap and builds its table.
pub fn load(common: &Common) -> CliResult<StructureConstants> {
    let level = AlgebraLevel::with_max(common.level, common.max_level)?;
    Ok(hypercx_core::build_algebra(level))
}
