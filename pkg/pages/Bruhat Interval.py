import streamlit as st

from cellembed.config import Config
from cellembed.errors import CellEmbedError, GuardExceededError
from cellembed.interval import enumerate_interval
from cellembed.perm import Base, bruhat_leq, format_permutation, parse

st.title("Bruhat Interval")
st.subheader("Compare two permutations and walk the interval between them")

config = Config.from_env()

col1, col2 = st.columns(2)

with col1:
    x_text = st.text_input("Bottom x", value="[1324]")
    y_text = st.text_input("Top y", value="[3412]")
    base = st.radio("Letters start at", [Base.ONE, Base.ZERO], format_func=lambda b: "1" if b is Base.ONE else "0",
                    horizontal=True)
    show_elements = st.checkbox("List every element")
    compute = st.button("Enumerate")

with col2:
    if compute:
        if not x_text.strip() or not y_text.strip():
            st.warning("⚠️ Please enter both permutations.")
        else:
            try:
                x, y = parse(x_text, base), parse(y_text, base)
                if not bruhat_leq(x, y):
                    st.warning(f"{x_text} is not below {y_text} in Bruhat order.")
                else:
                    found = enumerate_interval(x, y, config.interval_max)
                    st.success(f"✅ {found.size} elements, {len(found.cover_edges)} cover relations")
                    st.write("Elements per rank:", list(found.rank_sizes()))
                    if show_elements:
                        for rank, count in enumerate(found.rank_sizes()):
                            members = [format_permutation(z, base) for z in found.elements if found.rank_of[z] == rank]
                            st.text(f"{rank}: " + " ".join(members))
            except GuardExceededError as e:
                st.error(f"❌ Interval too large: {e}")
            except CellEmbedError as e:
                st.error(f"❌ {e}")

st.write("---")
st.markdown("""
<h3>Bruhat order</h3>
<p>x ≤ y when, for every p and q, at least as many of x(1), ..., x(p) are ≤ q as of y(1), ..., y(p).
The interval [x, y] is graded by length: every maximal chain from x to y has length ℓ(y) - ℓ(x).</p>
<p>Elements are found by climbing from x through transpositions that add exactly one inversion,
keeping only those still below y. The size guard comes from <code>GUARD_INTERVAL_MAX</code>.</p>
""", unsafe_allow_html=True)
