use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Errors shared by the whole crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A pipe-dream search exceeded its node cap.
    NodeCapExceeded { cap: u64 },
    /// A stable limit did not settle within the shift bound.
    StabilizationNotDetected { bound: u32 },
    /// Exact polynomial division left a remainder. This signals a
    /// labeling-convention bug upstream, so it fails loudly.
    NotDivisible,
    /// The grassmannian expansion has no exact integer solution over the
    /// candidate partitions, even after enlargement.
    NoExactExpansion { degree_bound: i64 },
    /// The Demazure product of an assembled lacing diagram is not a
    /// Zelevinsky permutation for its ranks.
    NotZelevinsky,
    /// No permutation realizes the requested rank array.
    NoZelevinskyPermutation,
    /// A rank array violated its validity conditions; one message per
    /// violated condition.
    InvalidRankArray(Vec<String>),
    /// Malformed input to a constructor.
    Invalid(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NodeCapExceeded { cap } => {
                write!(f, "search exceeded the node cap of {cap}")
            }
            Error::StabilizationNotDetected { bound } => {
                write!(f, "no stable value detected for shifts up to {bound}")
            }
            Error::NotDivisible => write!(f, "polynomial division is not exact"),
            Error::NoExactExpansion { degree_bound } => write!(
                f,
                "no exact expansion over partitions of size at most {degree_bound}"
            ),
            Error::NotZelevinsky => {
                write!(f, "Demazure product is not a Zelevinsky permutation")
            }
            Error::NoZelevinskyPermutation => {
                write!(f, "no permutation realizes this rank array")
            }
            Error::InvalidRankArray(msgs) => {
                write!(f, "invalid rank array: ")?;
                for (i, m) in msgs.iter().enumerate() {
                    if i > 0 {
                        write!(f, "; ")?;
                    }
                    write!(f, "{m}")?;
                }
                Ok(())
            }
            Error::Invalid(msg) => write!(f, "{msg}"),
        }
    }
}
