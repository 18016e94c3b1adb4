/// Whether `u` embeds into `w` preserving order (greedy left-to-right match).
pub fn subsequence<T: PartialEq>(u: &[T], w: &[T]) -> bool {
    let mut rest = u.iter().peekable();
    for x in w {
        if rest.peek() == Some(&x) {
            rest.next();
        }
    }
    rest.peek().is_none()
}
