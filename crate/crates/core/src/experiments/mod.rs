//! Empirical checks: supported-point sweeps and the transfer laws for
//! snowflaked and bi-Lipschitz images.

mod sweep;
mod transfer;

pub use sweep::{
    bs_sweep, fit_c_delta, reference_curve, CDeltaFit, SweepRecord, SweepSpec, FIT_HEADER,
    SWEEP_HEADER,
};
pub use transfer::{
    check_bilipschitz_transfer, check_snowflake_transfer, BiLipschitzReport, BoundaryHit,
    SnowflakeTransferReport, TransferMap,
};
