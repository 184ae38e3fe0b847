import streamlit as st

from cellembed import __version__

st.set_page_config(page_title="Cell Embedding Workbench", layout="wide", page_icon="🧮")

st.title("Cell Embedding Workbench")

st.markdown(
    """
    <style>
    .stApp > main > div {
        max-width: 90% !important;
        margin-left: auto !important;
        margin-right: auto !important;
    }
    .stApp {
        background: linear-gradient(-45deg, #e0eafc, #cfdef3, #f3e7e9, #e3eeff);
        background-size: 400% 400%;
        animation: drift 30s ease infinite;
        color: #000;
    }
    @keyframes drift {
        0% { background-position: 0% 50%; }
        50% { background-position: 100% 50%; }
        100% { background-position: 0% 50%; }
    }
    .tool-strip {
        display: flex;
        flex-wrap: wrap;
        gap: 16px;
        padding: 10px 0;
    }
    .tool-box {
        background: rgba(255, 255, 255, 0.75);
        border-radius: 12px;
        padding: 8px 16px;
        font-weight: 600;
        font-size: 1.05rem;
        box-shadow: 0 2px 5px rgba(0,0,0,0.1);
        white-space: nowrap;
    }
    </style>
    """,
    unsafe_allow_html=True,
)

st.markdown(
    """
    <div class="tool-strip">
      <div class="tool-box">🧩 RSK Calculator</div>
      <div class="tool-box">📐 Bruhat Interval</div>
      <div class="tool-box">🪜 Cell Embedding</div>
      <div class="tool-box">🧮 KL Polynomial</div>
      <div class="tool-box">🗂️ Cell Partition</div>
    </div>
    """,
    unsafe_allow_html=True,
)

st.sidebar.markdown(f"cellembed **{__version__}**")

st.markdown(
    """
    <br>
    <p style="font-size:20px; font-weight: 500;">
    Any Bruhat interval [x, y] of a symmetric group embeds into an interval [v, w] of a larger
    symmetric group whose endpoints share a P symbol, that is, lie in one right Kazhdan-Lusztig cell.
    The pages on the left build that embedding step by step and check everything it promises:
    RSK symbols, Bruhat comparisons, interval sizes and shapes, Kazhdan-Lusztig polynomials and cells.
    </p>
    """,
    unsafe_allow_html=True,
)

col1, col2 = st.columns([4, 1])
with col1:
    st.markdown(
        """
        <p style="font-size:18px; color: #333; margin-top: 10px;">
        Permutations are written in one-line notation, either compact like <code>[895621a743cb]</code>
        (a=10, b=11, ...) or with separators like <code>3 1 4 2</code>.<br>
        The same engine runs from the terminal: <code>python -m cellembed --help</code>.
        </p>
        """,
        unsafe_allow_html=True,
    )
with col2:
    st.code("python -m cellembed selftest", language="bash")
