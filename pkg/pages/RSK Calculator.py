import streamlit as st

from cellembed.errors import CellEmbedError
from cellembed.perm import Base, format_permutation, inverse, parse
from cellembed.tableau import rsk

st.title("RSK Calculator")
st.subheader("Insertion and recording tableaux of a permutation by column insertion")

col1, col2 = st.columns(2)

with col1:
    word = st.text_input("Permutation", value="[3142]", help="Compact [3142] or separated 3 1 4 2")
    base = st.radio("Letters start at", [Base.ONE, Base.ZERO], format_func=lambda b: "1" if b is Base.ONE else "0",
                    horizontal=True)
    compute = st.button("Compute")

with col2:
    if compute:
        if not word.strip():
            st.warning("Please enter a permutation.")
        else:
            try:
                w = parse(word, base)
                pair = rsk(w)
                st.markdown(f"**P** = `{pair.P.slash(base.offset)}`")
                st.code(pair.P.render(base.offset))
                st.markdown(f"**Q** = `{pair.Q.slash(base.offset)}`")
                st.code(pair.Q.render(base.offset))
                st.caption(f"shape {pair.shape}, inverse {format_permutation(inverse(w), base)}")
            except CellEmbedError as e:
                st.error(f"❌ {e}")

st.write("---")
st.markdown("""
<h3>How the symbols are built</h3>
<p>The insertion tableau P(w) is obtained by column inserting w(n), w(n-1), ..., w(1) into the
empty tableau: a value enters the first column and displaces the smallest larger entry, which moves on
to the next column. The recording tableau Q(w) labels with i the cell created by the i-th insertion.</p>
<p>For w = [3142] the tableaux grow as 2, (2/4), (12/4), (12/34), so P = (12/34) and Q = (13/24).</p>

<h3>Why it matters</h3>
<ul>
<li>Two permutations lie in the same right cell exactly when their P symbols agree.</li>
<li>They lie in the same left cell exactly when their Q symbols agree, that is when P(x<sup>-1</sup>) = P(y<sup>-1</sup>).</li>
</ul>
""", unsafe_allow_html=True)
