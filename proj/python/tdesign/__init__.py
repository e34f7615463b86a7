# Copyright 2026 the tdesign authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact t-design verification through Walsh spectra."""

from ._core import (
    admissible,
    anf_terms,
    binomial,
    code_weights,
    fano,
    krawtchouk,
    oa_strength,
    s5612,
    spectrum,
    steiner_a,
    steiner_a_tilde,
    verify,
)

__all__ = [
    "admissible",
    "anf_terms",
    "binomial",
    "code_weights",
    "fano",
    "krawtchouk",
    "oa_strength",
    "s5612",
    "spectrum",
    "steiner_a",
    "steiner_a_tilde",
    "verify",
]
