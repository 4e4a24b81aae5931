//! Error taxonomy shared by every module.
//!
//! Variants are grouped by contract: `Parse`/`Domain`/`Unsupported` report
//! caller mistakes, `SizeLimit` reports a refused computation whose cost bound
//! was exceeded, and `Internal` reports a broken invariant inside the library
//! (these indicate a bug and are never expected in normal operation).

use thiserror::Error;

/// Error type for the whole crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A group or root-system specification string could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// The requested object exists but violates a precondition of the
    /// operation (wrong group, element outside the lattice, bad exponent...).
    #[error("domain error: {0}")]
    Domain(String),

    /// The specification parses but names a group outside the supported
    /// (irreducible, well-generated) families.
    #[error("unsupported group: {0}")]
    Unsupported(String),

    /// An enumeration or materialization was refused because its size bound
    /// was exceeded.  `needed` is the size the computation would require.
    #[error("size limit exceeded: needed {needed}, bound {bound} ({what})")]
    SizeLimit {
        /// Size the computation would have required.
        needed: u128,
        /// Configured bound that refused it.
        bound: u128,
        /// Short description of the refused computation.
        what: String,
    },

    /// A generator catalog file was missing, malformed, or failed validation.
    #[error("catalog error: {0}")]
    Catalog(String),

    /// An internal invariant failed; this is a bug in the library.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Shorthand constructor for [`Error::Domain`].
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// Shorthand constructor for [`Error::Internal`].
    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
