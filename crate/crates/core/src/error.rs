// Copyright 2026 the coolsim developers
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except
// in compliance with the License. You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License
// is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express
// or implied. See the License for the specific language governing permissions and limitations under
// the License.

//! Crate-wide error type and the exit-code contract used by the CLI.

use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid configuration: bad parameter values, malformed config files,
    /// out-of-range indices. Exit code 1.
    #[error("configuration error: {0}")]
    Config(String),

    /// Filesystem or serialization failure. Exit code 2.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// Request exceeds a documented size limit (dense diagonalization,
    /// transition tables). Exit code 3.
    #[error("capability limit: {0}")]
    Capability(String),

    /// Mathematically undefined request (e.g. the ramped amplitude at zero
    /// ramp slope). Exit code 1.
    #[error("domain error: {0}")]
    Domain(String),

    /// A state the simulator cannot reach unless its own invariants are
    /// broken; indicates a bug, not a user error.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Exit code contract: 0 success, 1 config error, 2 i/o error,
    /// 3 capability limit.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::Domain(_) => 1,
            Error::Io(_) => 2,
            Error::Capability(_) => 3,
            Error::Internal(_) => 1,
        }
    }

    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    pub(crate) fn capability(msg: impl Into<String>) -> Self {
        Error::Capability(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
