use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Which class the window belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum WindowKind {
    WellCovered,
    OneWellCovered,
    CoronaK2,
}

impl WindowKind {
    pub const ALL: [WindowKind; 3] = [
        WindowKind::WellCovered,
        WindowKind::OneWellCovered,
        WindowKind::CoronaK2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            WindowKind::WellCovered => "WELL_COVERED",
            WindowKind::OneWellCovered => "ONE_WELL_COVERED",
            WindowKind::CoronaK2 => "CORONA_K2",
        }
    }
}

impl fmt::Display for WindowKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for WindowKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        WindowKind::ALL
            .into_iter()
            .find(|k| k.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown window kind {s:?}"))
    }
}

/// Where the well-covered window starts.
///
/// Both readings of the published index list give the same set whenever the
/// list is taken to be consecutive from its first element; `FloorPlusOne`
/// takes the second listed element, `⌊α/2⌋ + 1`, as the start instead. The
/// two differ only for even α. Other kinds ignore this setting.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WindowStart {
    /// `lo = ⌈α/2⌉`.
    #[default]
    Ceil,
    /// `lo = ⌊α/2⌋ + 1`.
    FloorPlusOne,
}

/// An inclusive index interval `lo..=hi` of the coefficient sequence; empty
/// when `lo > hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Window {
    pub lo: usize,
    pub hi: usize,
    pub kind: WindowKind,
}

impl Window {
    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    pub fn len(&self) -> usize {
        if self.is_empty() {
            0
        } else {
            self.hi - self.lo + 1
        }
    }

    pub fn indices(&self) -> RangeInclusive<usize> {
        self.lo..=self.hi
    }

    /// Whether every index lies in `[lo', hi']` of `other`.
    pub fn is_within(&self, other: &Window) -> bool {
        self.is_empty() || (other.lo <= self.lo && self.hi <= other.hi)
    }
}

/// The index window on which the roller-coaster ordering is open for a graph
/// of the given class with independence number `alpha` and order `n`.
pub fn roller_coaster_window(alpha: usize, n: usize, kind: WindowKind) -> Result<Window> {
    roller_coaster_window_with(alpha, n, kind, WindowStart::Ceil)
}

pub fn roller_coaster_window_with(
    alpha: usize,
    n: usize,
    kind: WindowKind,
    start: WindowStart,
) -> Result<Window> {
    if alpha == 0 {
        return Err(Error::Window("alpha must be at least 1".into()));
    }
    if n < alpha {
        return Err(Error::Window(format!("order {n} is below alpha {alpha}")));
    }
    let general_hi = alpha.min((n - 1).div_ceil(3));
    let (lo, hi) = match kind {
        WindowKind::WellCovered => {
            let lo = match start {
                WindowStart::Ceil => alpha.div_ceil(2),
                WindowStart::FloorPlusOne => alpha / 2 + 1,
            };
            (lo, general_hi)
        }
        WindowKind::OneWellCovered => ((2 * alpha).div_ceil(3), general_hi),
        WindowKind::CoronaK2 => ((2 * alpha).div_ceil(3), (3 * alpha - 1).div_ceil(4)),
    };
    Ok(Window { lo, hi, kind })
}
