def process_data(data):
    save(data)
