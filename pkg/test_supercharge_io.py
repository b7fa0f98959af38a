#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
超荷数据读写测试
"""

import json
import os
import sys

import pandas as pd
import pytest

# 添加当前目录到Python路径
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from exterior_spinor import Form, VectorV
from orbit_classifier import NONTRIVIAL_LABELS, OrbitLabel, classify, representative
from scalar_linalg import HALF, I, ONE, Scalar
from superalgebra import Supercharge
from supercharge_io import (
    SuperchargeIO, parse_label, pencil_from_json, spinor_from_json, spinor_to_json,
    supercharge_from_json, supercharge_to_json, vector_from_json, vector_to_json,
)
from twist_errors import ParseError

FIXTURE_FILES = {
    OrbitLabel.R1_PURE_ISO: 'r1_pure_iso.json',
    OrbitLabel.R1_PURE_NON_ISO: 'r1_pure_noniso.json',
    OrbitLabel.R1_IMPURE: 'r1_impure.json',
    OrbitLabel.R2_LINE: 'r2_line.json',
    OrbitLabel.R2_TWO_POINTS: 'r2_two_points.json',
    OrbitLabel.R2_TANGENT: 'r2_tangent.json',
}


def test_fixtures_hold_representatives():
    io = SuperchargeIO()
    for label, name in FIXTURE_FILES.items():
        assert io.load_supercharge(io.fixtures_dir / name) == representative(label), name


def test_save_and_load(tmp_path):
    io = SuperchargeIO()
    q = representative(OrbitLabel.R2_TANGENT)
    path = tmp_path / 'q.json'
    io.save_supercharge(path, q)
    assert io.load_supercharge(path) == q
    with open(path, encoding='utf-8') as f:
        data = json.load(f)
    assert data['columns'][1] == {'23': '1/1*i', '45': '1/1*i'}


def test_spinor_json_is_sparse_and_canonical():
    psi = Form({'45': Scalar(1, -1), '': 2, '1234': 0})
    data = spinor_to_json(psi)
    assert data == {'': '2/1', '45': '1/1+-1/1*i'}
    assert spinor_from_json(data) == psi
    assert spinor_from_json({'23': '1/2 + i'}) == Form({'23': HALF + I})


@pytest.mark.parametrize("data", [
    {'1': '1/1'},
    {'123': '1/1'},
    {'54': '1/1'},
    {'ab': '1/1'},
    {'': 1},
    {'': 'x'},
    ['1/1'],
])
def test_spinor_json_rejects_bad_input(data):
    with pytest.raises(ParseError):
        spinor_from_json(data)


def test_vector_json():
    v = VectorV.e(1).scale(I)
    data = vector_to_json(v)
    assert vector_from_json(data) == v
    with pytest.raises(ParseError):
        vector_from_json({'x1': '1/1'})


def test_supercharge_json_structure():
    assert supercharge_from_json(supercharge_to_json(Supercharge())) == Supercharge()
    with pytest.raises(ParseError):
        supercharge_from_json({'columns': [{}]})
    with pytest.raises(ParseError):
        supercharge_from_json({'cols': [{}, {}]})


def test_pencil_files():
    io = SuperchargeIO()
    pencil = io.load_pencil(io.fixtures_dir / 'pencil_line.json')
    assert pencil.member(0) == Supercharge.tensor(Form.one(), (ONE, 0))
    with pytest.raises(ParseError):
        pencil_from_json({'base': {'columns': [{}, {}]}})


def test_missing_and_broken_files(tmp_path):
    io = SuperchargeIO()
    with pytest.raises(ParseError):
        io.load_supercharge(tmp_path / 'absent.json')
    broken = tmp_path / 'broken.json'
    broken.write_text('{"columns": [', encoding='utf-8')
    with pytest.raises(ParseError):
        io.load_supercharge(broken)


def test_manifest():
    io = SuperchargeIO()
    rows = io.load_manifest()
    assert [parse_label(r['label']) for r in rows] == NONTRIVIAL_LABELS
    for row in rows:
        assert io.load_representative(row) == representative(parse_label(row['label']))


def test_reports_frame_and_export(tmp_path):
    rows = [classify(representative(label), with_orbit=False).to_dict() for label in NONTRIVIAL_LABELS]
    frame = SuperchargeIO.reports_frame(rows)
    assert isinstance(frame, pd.DataFrame)
    assert len(frame) == 6
    assert list(frame['translations_dim']) == [5, 5, 9, 7, 9, 9]

    csv_path = SuperchargeIO.export_table(frame, tmp_path / 'table.csv')
    assert list(pd.read_csv(csv_path)['label']) == [label.value for label in NONTRIVIAL_LABELS]
    json_path = SuperchargeIO.export_table(frame, tmp_path / 'table.json')
    with open(json_path, encoding='utf-8') as f:
        assert len(json.load(f)) == 6


def test_condition_grids_skip_notes(tmp_path):
    io = SuperchargeIO()
    grids = io.load_condition_grids()
    assert set(grids) == {'R2Line', 'R2TwoPoints', 'R2Tangent'}
    assert grids['R2Tangent'].get('t_slice') is True
    assert 'A_11 + A_22 + A_33 + A_44 + A_55 = 0' in grids['R2Line']['0']

    (tmp_path / 'stabilizer_grids.json').write_text('[]', encoding='utf-8')
    with pytest.raises(ParseError):
        SuperchargeIO(tmp_path).load_condition_grids()
