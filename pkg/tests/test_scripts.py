import pathlib
import runpy

SCRIPTS = pathlib.Path(__file__).parent.parent / "scripts"


def test_sixteenfold_script(capsys):
    runpy.run_path(str(SCRIPTS / "sixteenfold.py"), run_name="__main__")
    out = capsys.readouterr().out
    assert "16 extensions total" in out
    assert out.count("pointed") >= 8 and out.count("ising-type") >= 8


def test_survey_script(capsys):
    runpy.run_path(str(SCRIPTS / "survey_catalog.py"), run_name="__main__")
    out = capsys.readouterr().out
    assert "extension_exists_S" in out
    assert len(out.strip().splitlines()) >= 20
