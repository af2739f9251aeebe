import pytest

from relgame import dump_structure, dump_unit, fixtures


@pytest.fixture(scope="session")
def refl1():
    return fixtures.refl1()


@pytest.fixture(scope="session")
def arrow():
    return fixtures.arrow()


@pytest.fixture(scope="session")
def sym2():
    return fixtures.sym2()


@pytest.fixture(scope="session")
def full2():
    return fixtures.full2()


@pytest.fixture(scope="session")
def full2_bad():
    return fixtures.full2_bad()


@pytest.fixture(scope="session")
def full3():
    return fixtures.full3()


@pytest.fixture()
def structure_file(tmp_path):
    def write(structure, name="structure.json"):
        path = tmp_path / name
        path.write_text(dump_structure(structure), encoding="utf-8")
        return str(path)

    return write


@pytest.fixture()
def unit_file(tmp_path):
    def write(unit, name="unit.json"):
        path = tmp_path / name
        path.write_text(dump_unit(unit), encoding="utf-8")
        return str(path)

    return write
