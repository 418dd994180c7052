//! Named parameter grids for cross-checking.

use crate::error::{Error, Result};
use crate::liealg::{Family, FkmParams, RepDescriptor};

fn reps(families: impl IntoIterator<Item = Family>) -> Vec<RepDescriptor> {
    families.into_iter().filter_map(|f| RepDescriptor::new(f).ok()).collect()
}

/// AIII 2..5 x 2..5, BI p 1..4 q 0..4 with p+q >= 3, CII 2..4 x 2..4,
/// DI 2..4 x 2..4, DIII 4..6, CI 2..5.
pub fn classical_grid() -> Vec<RepDescriptor> {
    let mut fs = Vec::new();
    for p in 2..=5 {
        for q in 2..=5 {
            fs.push(Family::AIII { p, q });
        }
    }
    for p in 1..=4 {
        for q in 0..=4 {
            if p + q >= 3 {
                fs.push(Family::BI { p, q });
            }
        }
    }
    for p in 2..=4 {
        for q in 2..=4 {
            fs.push(Family::CII { p, q });
        }
    }
    for p in 2..=4 {
        for q in 2..=4 {
            fs.push(Family::DI { p, q });
        }
    }
    fs.extend((4..=6).map(|p| Family::DIII { p }));
    fs.extend((2..=5).map(|p| Family::CI { p }));
    reps(fs)
}

/// Feasible FKM data with `m <= max_m` and at most `max_k` modules.
pub fn fkm_grid(max_m: usize, max_k: usize) -> Vec<RepDescriptor> {
    reps(FkmParams::enumerate_feasible(max_m, max_k).into_iter().map(Family::Fkm))
}

/// Exceptional entries whose weights are generated.
pub fn exceptional_grid() -> Vec<RepDescriptor> {
    reps(Family::exceptional()).into_iter().filter(|r| !r.tabulated_only).collect()
}

pub const GRID_PRESETS: [&str; 4] = ["classical", "fkm", "exceptional", "all"];

pub fn grid_preset(name: &str) -> Result<Vec<RepDescriptor>> {
    Ok(match name {
        "classical" => classical_grid(),
        "fkm" => fkm_grid(10, 8),
        "exceptional" => exceptional_grid(),
        "all" => [classical_grid(), fkm_grid(10, 8), exceptional_grid()].concat(),
        _ => return Err(Error::Usage(format!("unknown grid '{name}', expected one of {}", GRID_PRESETS.join(", ")))),
    })
}
