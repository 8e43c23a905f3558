namespace defendpp {}
