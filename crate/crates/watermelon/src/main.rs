fn main() {
    // Restore the default SIGPIPE disposition so piping into a pager or `head`
    // ends the process quietly instead of panicking on a failed write.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(watermelon::cli::run());
}
