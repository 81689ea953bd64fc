//! Crate-wide error type.

use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A quadrilateral or transform is degenerate (zero area, collinear
    /// vertices, self-intersection, singular linear part).
    #[error("degenerate geometry: {0}")]
    DegenerateGeometry(String),

    /// An argument violates a documented precondition.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Manifest could not be parsed.
    #[error("manifest parse error in {path}: {message}")]
    ManifestParse { path: PathBuf, message: String },

    /// A scene in a manifest violates an annotation invariant.
    #[error("invalid annotation in scene {scene_index} ({image}), space {space_index}: {source}")]
    SceneValidation {
        scene_index: usize,
        image: String,
        space_index: usize,
        #[source]
        source: Box<Error>,
    },

    /// A scene-level (not per-space) manifest invariant failed.
    #[error("invalid scene {scene_index} ({image}): {message}")]
    SceneInvalid {
        scene_index: usize,
        image: String,
        message: String,
    },

    /// File I/O failure; always names the offending path.
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// An image file exists but is not a well-formed binary PPM.
    #[error("image format error in {path}: {message}")]
    ImageFormat { path: PathBuf, message: String },

    /// A checkpoint file is malformed or has unexpected tensor shapes.
    #[error("checkpoint error in {path}: {message}")]
    Checkpoint { path: PathBuf, message: String },

    /// Synthetic scene generation could not satisfy its postconditions.
    #[error("generation error: {0}")]
    Generation(String),

    /// Wraps an error with the index of the parking space it concerns.
    #[error("space {index}: {source}")]
    Space {
        index: usize,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// Attach a parking-space index to an error bubbling out of per-space work.
    pub fn for_space(index: usize, source: Error) -> Self {
        Error::Space {
            index,
            source: Box::new(source),
        }
    }
}
