use core::fmt;

use crate::error::Error;

/// Largest supported sample count `r`. Expanded kernel coefficients such as
/// `C(64,32)` stay exact in big integers, but nothing past this is tested.
pub const MAX_R: u32 = 64;

/// How the `r`-tuple of preferential samples is drawn each step.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Sampling {
    /// `r` independent draws; the same vertex may appear several times.
    /// This is the main model.
    #[default]
    WithReplacement,
    /// The whole tuple is redrawn until all vertex ids are distinct,
    /// i.e. the i.i.d. tuple conditioned on the all-different event.
    AllDistinct,
}

/// A model instance: sample `r` vertices preferentially, attach to the one
/// with the `s`-th highest degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ModelParams {
    r: u32,
    s: u32,
    sampling: Sampling,
}

impl ModelParams {
    /// Validates `1 <= s <= r <= MAX_R`; sampling defaults to
    /// [`Sampling::WithReplacement`].
    pub fn new(r: u32, s: u32) -> Result<Self, Error> {
        if s < 1 || s > r || r > MAX_R {
            return Err(Error::InvalidParams { r, s });
        }
        Ok(ModelParams { r, s, sampling: Sampling::WithReplacement })
    }

    pub fn with_sampling(mut self, sampling: Sampling) -> Self {
        self.sampling = sampling;
        self
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn sampling(&self) -> Sampling {
        self.sampling
    }
}

impl fmt::Display for ModelParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.r, self.s)?;
        if self.sampling == Sampling::AllDistinct {
            write!(f, " all-distinct")?;
        }
        Ok(())
    }
}
