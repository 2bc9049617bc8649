/// Resource bounds for the search-based operations.
///
/// Exceeding a bound is a reported error, never a silent truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Cap on nodes visited by pipe-dream searches.
    pub node_cap: u64,
    /// Cap on the shift parameter in stable-limit detection.
    /// `None` picks a per-operation default.
    pub stab_bound: Option<u32>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            node_cap: 10_000_000,
            stab_bound: None,
        }
    }
}

/// Default shift cap used when detecting stable limits of quiver
/// K-polynomials.
pub const DEFAULT_QUIVER_STAB_BOUND: u32 = 4;

/// Running node counter checked against [`Limits::node_cap`].
#[derive(Debug)]
pub struct Budget {
    cap: u64,
    used: u64,
}

impl Budget {
    pub fn new(limits: &Limits) -> Self {
        Budget {
            cap: limits.node_cap,
            used: 0,
        }
    }

    #[inline]
    pub fn tick(&mut self) -> crate::Result<()> {
        self.used += 1;
        if self.used > self.cap {
            Err(crate::Error::NodeCapExceeded { cap: self.cap })
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }
}
