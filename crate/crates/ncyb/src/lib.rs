pub mod classical;
pub mod matrix;
pub mod quasidet;
pub mod report;
pub mod ring;
pub mod sample;
pub mod suites;
pub mod uqrep;
pub mod ybmap;

/// Guide chapters, compiled as doc-tests.
pub mod guide {
    #[doc = include_str!("../../../book/src/chapter1.md")]
    pub mod chapter1 {}
    #[doc = include_str!("../../../book/src/chapter2.md")]
    pub mod chapter2 {}
    #[doc = include_str!("../../../book/src/chapter3.md")]
    pub mod chapter3 {}
    #[doc = include_str!("../../../book/src/chapter4.md")]
    pub mod chapter4 {}
    #[doc = include_str!("../../../book/src/chapter5.md")]
    pub mod chapter5 {}
}
