//! Carrier data model and file codecs.
//!
//! Everything downstream operates on two in-memory value types: [`Image`]
//! (grayscale raster, 8 or 16 bits per pixel) and [`AudioClip`] (mono,
//! normalized `f64` samples). The codecs are deliberately minimal formats
//! with bit-exact semantics: binary PGM/PPM for rasters and canonical
//! PCM16 mono WAV for audio.

mod pnm;
mod wav;

pub use pnm::{load_pgm, load_ppm, save_pgm};
pub use wav::{load_wav, save_wav};

use thiserror::Error;

/// Largest sample value an [`AudioClip`] may hold; samples live in `[-1.0, 1.0)`.
pub const MAX_SAMPLE: f64 = 1.0 - f64::EPSILON;

#[derive(Debug, Error)]
pub enum MediaError {
    #[error("unsupported magic number {found:?}, expected {expected:?}")]
    UnsupportedMagic { expected: String, found: String },
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("unsupported maxval {0} (expected 255 or 65535)")]
    UnsupportedMaxval(u32),
    #[error("truncated payload: expected {expected} bytes, found {found}")]
    TruncatedPayload { expected: usize, found: usize },
    #[error("{extra} trailing bytes after payload")]
    TrailingData { extra: usize },
    #[error("malformed RIFF container: {0}")]
    MalformedRiff(String),
    #[error("unsupported WAV format code {0}, only PCM (1) is supported")]
    UnsupportedAudioFormat(u16),
    #[error("unsupported channel count {0}, only mono is supported")]
    UnsupportedChannels(u16),
    #[error("unsupported sample width {0}, only 16-bit is supported")]
    UnsupportedSampleWidth(u16),
    #[error("image dimensions must be positive, got {width}x{height}")]
    InvalidDimensions { width: u32, height: u32 },
    #[error("pixel buffer holds {found} values, dimensions require {expected}")]
    PixelCountMismatch { expected: usize, found: usize },
    #[error("pixel value {value} exceeds the {bits}-bit maximum {max}")]
    PixelOutOfRange { value: u16, bits: u8, max: u16 },
    #[error("sample {index} is {value}, outside [-1.0, 1.0)")]
    SampleOutOfRange { index: usize, value: f64 },
    #[error("sample rate must be positive")]
    ZeroSampleRate,
}

/// Bits per pixel of an [`Image`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BitDepth {
    Eight,
    Sixteen,
}

impl BitDepth {
    pub fn bits(self) -> u8 {
        match self {
            BitDepth::Eight => 8,
            BitDepth::Sixteen => 16,
        }
    }

    /// Largest representable pixel value (`2^bits - 1`).
    pub fn max_value(self) -> u16 {
        match self {
            BitDepth::Eight => 255,
            BitDepth::Sixteen => 65535,
        }
    }
}

/// Grayscale raster with explicit bit depth, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Image {
    width: u32,
    height: u32,
    bit_depth: BitDepth,
    pixels: Vec<u16>,
}

impl Image {
    /// Builds an image, checking dimensions, buffer length, and pixel range.
    pub fn new(
        width: u32,
        height: u32,
        bit_depth: BitDepth,
        pixels: Vec<u16>,
    ) -> Result<Self, MediaError> {
        if width == 0 || height == 0 {
            return Err(MediaError::InvalidDimensions { width, height });
        }
        let expected = width as usize * height as usize;
        if pixels.len() != expected {
            return Err(MediaError::PixelCountMismatch {
                expected,
                found: pixels.len(),
            });
        }
        let max = bit_depth.max_value();
        if let Some(&value) = pixels.iter().find(|&&p| p > max) {
            return Err(MediaError::PixelOutOfRange {
                value,
                bits: bit_depth.bits(),
                max,
            });
        }
        Ok(Image {
            width,
            height,
            bit_depth,
            pixels,
        })
    }

    /// Builds an image by evaluating `f(x, y)` at every pixel.
    pub fn from_fn(
        width: u32,
        height: u32,
        bit_depth: BitDepth,
        mut f: impl FnMut(u32, u32) -> u16,
    ) -> Result<Self, MediaError> {
        let mut pixels = Vec::with_capacity(width as usize * height as usize);
        for y in 0..height {
            for x in 0..width {
                pixels.push(f(x, y));
            }
        }
        Image::new(width, height, bit_depth, pixels)
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn bit_depth(&self) -> BitDepth {
        self.bit_depth
    }

    pub fn pixels(&self) -> &[u16] {
        &self.pixels
    }

    pub fn pixel_count(&self) -> usize {
        self.pixels.len()
    }
}

/// 24-bit color raster; only an input format, converted to gray before use.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RgbImage {
    width: u32,
    height: u32,
    pixels: Vec<[u8; 3]>,
}

impl RgbImage {
    pub fn new(width: u32, height: u32, pixels: Vec<[u8; 3]>) -> Result<Self, MediaError> {
        if width == 0 || height == 0 {
            return Err(MediaError::InvalidDimensions { width, height });
        }
        let expected = width as usize * height as usize;
        if pixels.len() != expected {
            return Err(MediaError::PixelCountMismatch {
                expected,
                found: pixels.len(),
            });
        }
        Ok(RgbImage {
            width,
            height,
            pixels,
        })
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn pixels(&self) -> &[[u8; 3]] {
        &self.pixels
    }
}

/// Mono audio clip; samples are normalized to `[-1.0, 1.0)`.
#[derive(Debug, Clone, PartialEq)]
pub struct AudioClip {
    sample_rate: u32,
    samples: Vec<f64>,
}

impl AudioClip {
    pub fn new(sample_rate: u32, samples: Vec<f64>) -> Result<Self, MediaError> {
        if sample_rate == 0 {
            return Err(MediaError::ZeroSampleRate);
        }
        for (index, &value) in samples.iter().enumerate() {
            if !(-1.0..1.0).contains(&value) {
                return Err(MediaError::SampleOutOfRange { index, value });
            }
        }
        Ok(AudioClip {
            sample_rate,
            samples,
        })
    }

    pub fn sample_rate(&self) -> u32 {
        self.sample_rate
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }
}

/// Converts a color image to 8-bit grayscale using BT.601 luma weights.
pub fn rgb_to_gray(img: &RgbImage) -> Image {
    let pixels = img
        .pixels()
        .iter()
        .map(|&[r, g, b]| {
            let luma = 0.299 * f64::from(r) + 0.587 * f64::from(g) + 0.114 * f64::from(b);
            luma.round().clamp(0.0, 255.0) as u16
        })
        .collect();
    Image::new(img.width(), img.height(), BitDepth::Eight, pixels)
        .expect("gray conversion preserves dimensions and 8-bit range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn image_rejects_zero_dimensions() {
        assert!(matches!(
            Image::new(0, 3, BitDepth::Eight, vec![]),
            Err(MediaError::InvalidDimensions { .. })
        ));
    }

    #[test]
    fn image_rejects_wrong_pixel_count() {
        assert!(matches!(
            Image::new(2, 2, BitDepth::Eight, vec![0, 1, 2]),
            Err(MediaError::PixelCountMismatch {
                expected: 4,
                found: 3
            })
        ));
    }

    #[test]
    fn image_rejects_out_of_range_pixels() {
        assert!(matches!(
            Image::new(1, 1, BitDepth::Eight, vec![256]),
            Err(MediaError::PixelOutOfRange { value: 256, .. })
        ));
        assert!(Image::new(1, 1, BitDepth::Sixteen, vec![256]).is_ok());
    }

    #[test]
    fn clip_rejects_out_of_range_samples() {
        assert!(matches!(
            AudioClip::new(8000, vec![0.0, 1.0]),
            Err(MediaError::SampleOutOfRange { index: 1, .. })
        ));
        assert!(AudioClip::new(8000, vec![-1.0, MAX_SAMPLE]).is_ok());
    }

    #[test]
    fn clip_rejects_zero_rate() {
        assert!(matches!(
            AudioClip::new(0, vec![]),
            Err(MediaError::ZeroSampleRate)
        ));
    }

    #[test]
    fn empty_clip_is_valid() {
        let clip = AudioClip::new(44100, vec![]).unwrap();
        assert!(clip.is_empty());
    }

    #[test]
    fn gray_extremes() {
        let img = RgbImage::new(2, 1, vec![[255, 255, 255], [0, 0, 0]]).unwrap();
        assert_eq!(rgb_to_gray(&img).pixels(), &[255, 0]);
    }

    #[test]
    fn gray_pure_red() {
        // round(0.299 * 255) = 76
        let img = RgbImage::new(1, 1, vec![[255, 0, 0]]).unwrap();
        assert_eq!(rgb_to_gray(&img).pixels(), &[76]);
    }

    proptest! {
        // A weighted mean of the channels can never leave their range.
        #[test]
        fn gray_stays_within_channel_bounds(r in 0u8..=255, g in 0u8..=255, b in 0u8..=255) {
            let img = RgbImage::new(1, 1, vec![[r, g, b]]).unwrap();
            let gray = rgb_to_gray(&img).pixels()[0];
            let lo = r.min(g).min(b) as u16;
            let hi = r.max(g).max(b) as u16;
            prop_assert!(gray >= lo && gray <= hi);
        }
    }
}
