import pytest

from xyzplanar import codes


@pytest.fixture(scope="session")
def planar3():
    return codes.build_planar(3)


@pytest.fixture(scope="session")
def planar5():
    return codes.build_planar(5)


@pytest.fixture(scope="session")
def xyz3():
    return codes.build_xyz_planar(3)


@pytest.fixture(scope="session")
def xyz5():
    return codes.build_xyz_planar(5)


@pytest.fixture(scope="session")
def xyz7():
    return codes.build_xyz_planar(7)
