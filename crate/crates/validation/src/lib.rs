//! Holds the workspace acceptance suite (`cargo test -p palext-validation --test acceptance`).
//! It lives in its own package so it runs after every other test target.
