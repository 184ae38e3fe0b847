import streamlit as st

from cellembed.cells import CellKind, keyed_partition
from cellembed.config import Config
from cellembed.errors import CellEmbedError
from cellembed.klpoly import kl_cells
from cellembed.perm import format_permutation

st.title("Cell Partition")
st.subheader("Right, left and two-sided cells of S_n")

config = Config.from_env()

col1, col2 = st.columns([1, 2])

with col1:
    n = st.number_input("n", min_value=1, max_value=7, value=4, step=1)
    kind = st.selectbox("Kind", list(CellKind), format_func=lambda k: k.value)
    cross_check = st.checkbox("Cross-check with the KL preorder (n ≤ 5)")
    compute = st.button("Partition")

with col2:
    if compute:
        try:
            partition = keyed_partition(int(n), kind)
            st.success(f"✅ {len(partition)} cells")
            st.table([
                {"symbol": symbol, "size": len(cell), "members": " ".join(format_permutation(w) for w in cell)}
                for symbol, cell in partition.items()
            ])
            if cross_check:
                if n > 5:
                    st.warning("The KL preorder is only computed up to n = 5.")
                elif kl_cells(int(n), kind, max_ideal=config.ideal_max) == list(partition.values()):
                    st.success("✅ Same partition from Kazhdan-Lusztig polynomials")
                else:
                    st.error("❌ The KL preorder gives a different partition")
        except CellEmbedError as e:
            st.error(f"❌ {e}")

st.write("---")
st.markdown("""
<h3>Cells through RSK</h3>
<ul>
<li><b>Right cells:</b> permutations with the same P symbol.</li>
<li><b>Left cells:</b> permutations with the same Q symbol, equivalently inverses of a right cell.</li>
<li><b>Two-sided cells:</b> permutations whose symbols have the same shape.</li>
</ul>
<p>A right cell of shape λ has as many members as there are standard tableaux of shape λ. The optional
cross-check rebuilds the cells from μ-coefficients and descent sets and compares the two answers.</p>
""", unsafe_allow_html=True)
