//! 8-bit grayscale images and binary PGM (P5) I/O.

use crate::error::{AnalysisError, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrayImage {
    pub width: usize,
    pub height: usize,
    pub pixels: Vec<u8>,
}

impl GrayImage {
    pub fn new(width: usize, height: usize, pixels: Vec<u8>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(AnalysisError::InvalidDimensions(format!("{width}x{height}")));
        }
        if pixels.len() != width * height {
            return Err(AnalysisError::LengthMismatch(pixels.len(), width * height));
        }
        Ok(Self { width, height, pixels })
    }

    pub fn get(&self, x: usize, y: usize) -> u8 {
        self.pixels[y * self.width + x]
    }
}

pub fn write_pgm(img: &GrayImage) -> Vec<u8> {
    let mut out = format!("P5\n{} {}\n255\n", img.width, img.height).into_bytes();
    out.extend_from_slice(&img.pixels);
    out
}

pub fn read_pgm(bytes: &[u8]) -> Result<GrayImage> {
    let mut cursor = HeaderCursor { bytes, pos: 0 };
    if cursor.token()? != b"P5" {
        return Err(AnalysisError::Format("not a binary (P5) PGM".into()));
    }
    let width = cursor.number()?;
    let height = cursor.number()?;
    let maxval = cursor.number()?;
    if maxval != 255 {
        return Err(AnalysisError::Format(format!("maxval {maxval}, only 255 supported")));
    }
    // exactly one whitespace byte separates the header from the raster
    let start = cursor.pos + 1;
    let len = width.checked_mul(height).ok_or_else(|| AnalysisError::Format("dimensions overflow".into()))?;
    let raster = start
        .checked_add(len)
        .and_then(|end| bytes.get(start..end))
        .ok_or_else(|| AnalysisError::Format("raster truncated".into()))?;
    GrayImage::new(width, height, raster.to_vec())
}

struct HeaderCursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> HeaderCursor<'a> {
    fn skip_space_and_comments(&mut self) {
        while let Some(&b) = self.bytes.get(self.pos) {
            if b == b'#' {
                while self.bytes.get(self.pos).is_some_and(|&c| c != b'\n') {
                    self.pos += 1;
                }
            } else if b.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn token(&mut self) -> Result<&'a [u8]> {
        self.skip_space_and_comments();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(|b| !b.is_ascii_whitespace()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(AnalysisError::Format("header truncated".into()));
        }
        Ok(&self.bytes[start..self.pos])
    }

    fn number(&mut self) -> Result<usize> {
        let tok = self.token()?;
        std::str::from_utf8(tok)
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| AnalysisError::Format(format!("bad header field {:?}", String::from_utf8_lossy(tok))))
    }
}
